#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elastowave/vec2.hpp"

namespace elastowave {

enum class FKind { zero, cubic };                   // cubic: |u|^2 u
enum class GKind { zero, linear, cubic_plus };      // linear: delta*u, cubic_plus: delta*(|u|^2+1)*u
enum class InitialKind { test1, test2, zero, custom };

// Physical and stochastic parameters of one problem instance. Immutable in
// use; all evaluations below are pure.
struct ModelSpec {
    double lambda = 1.0;  // divergence coefficient, >= 0
    double mu = 1.0;      // strain coefficient, > 0
    double delta = 0.1;   // noise intensity, >= 0
    double T = 0.5;       // final time, > 0
    FKind F_kind = FKind::cubic;
    GKind G_kind = GKind::linear;
    InitialKind initial_kind = InitialKind::test1;
    // Nodal dof vectors used when initial_kind == custom (sized 2 * nodes
    // of the target mesh, boundary entries zero).
    std::vector<double> custom_u0;
    std::vector<double> custom_v0;
};

// Throws std::invalid_argument when a parameter invariant is violated.
void validate(const ModelSpec& spec);

ModelSpec test1_spec();
ModelSpec test2_spec();

Vec2 eval_F(const ModelSpec& spec, Vec2 u);
Vec2 eval_G(const ModelSpec& spec, Vec2 u);

struct InitialValue {
    Vec2 u0;
    Mat2 grad_u0;  // grad_u0[a][b] = d u0_a / d x_b
    Vec2 v0;
};

// Closed-form initial data and its exact Jacobian. Throws for
// initial_kind == custom (no analytic form).
InitialValue eval_initial(const ModelSpec& spec, Vec2 x);

struct NonlinearityCheck {
    double F_local_lipschitz = 0.0;  // estimated on |u|_inf <= radius
    double G_local_lipschitz = 0.0;
    bool F_globally_lipschitz = false;
    bool G_globally_lipschitz = false;
};

// Samples difference quotients of F and G on the ball |u|_inf <= radius.
// The global flags report whether the kind admits a global Lipschitz bound
// at all (the cubic kinds do not).
NonlinearityCheck check_nonlinearities(const ModelSpec& spec, double radius,
                                       int probes = 2000, std::uint64_t seed = 1);

std::string to_string(FKind k);
std::string to_string(GKind k);
std::string to_string(InitialKind k);

}  // namespace elastowave
