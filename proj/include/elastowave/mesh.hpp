#pragma once

#include <vector>

#include "elastowave/vec2.hpp"

namespace elastowave {

// Structured triangulation of the unit square: (n+1)^2 grid nodes, each
// cell split along the lower-left -> upper-right diagonal, 2n^2 triangles
// with counter-clockwise vertices and signed area h^2/2. Meshes at n and
// 2n are nested node-for-node. Immutable after construction.
struct Mesh {
    int n = 0;       // subdivisions per side
    double h = 0.0;  // 1/n
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary_nodes;  // sorted node indices on the boundary
    std::vector<char> on_boundary;    // per-node flag

    int node_index(int i, int j) const { return j * (n + 1) + i; }
};

// Throws std::invalid_argument for n < 1.
Mesh uniform_triangulation(int n);

double triangle_area(const Mesh& mesh, int t);

struct PointLocation {
    int triangle = -1;
    std::array<double, 3> bary{};  // nonnegative, sums to 1
};

// Lowest-index triangle containing p, with tolerance 1e-12 on the
// barycentric coordinates so shared edges and floating-point boundary
// cases resolve deterministically. Throws std::domain_error for p outside
// the closed unit square.
PointLocation locate_point(const Mesh& mesh, Vec2 p);

}  // namespace elastowave
