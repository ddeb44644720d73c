#include "elastowave/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastowave {

namespace {
constexpr double kContainTol = 1e-12;
}

Mesh uniform_triangulation(int n) {
    if (n < 1) throw std::invalid_argument("uniform_triangulation: n must be >= 1");
    Mesh mesh;
    mesh.n = n;
    mesh.h = 1.0 / n;
    const int m = n + 1;
    mesh.nodes.reserve(static_cast<size_t>(m) * m);
    mesh.on_boundary.assign(static_cast<size_t>(m) * m, 0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            mesh.nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
            if (i == 0 || i == n || j == 0 || j == n) {
                mesh.on_boundary[mesh.node_index(i, j)] = 1;
                mesh.boundary_nodes.push_back(mesh.node_index(i, j));
            }
        }
    }
    std::sort(mesh.boundary_nodes.begin(), mesh.boundary_nodes.end());
    mesh.triangles.reserve(static_cast<size_t>(2) * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int a = mesh.node_index(i, j);
            const int b = mesh.node_index(i + 1, j);
            const int c = mesh.node_index(i + 1, j + 1);
            const int d = mesh.node_index(i, j + 1);
            mesh.triangles.push_back({a, b, c});
            mesh.triangles.push_back({a, c, d});
        }
    }
    return mesh;
}

double triangle_area(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles.at(t);
    const Vec2 a = mesh.nodes[tri[0]];
    const Vec2 b = mesh.nodes[tri[1]];
    const Vec2 c = mesh.nodes[tri[2]];
    return 0.5 * cross(b - a, c - a);
}

namespace {

// Barycentric coordinates of p in triangle t; true when all are >= -tol.
bool barycentric(const Mesh& mesh, int t, Vec2 p, std::array<double, 3>& bary) {
    const auto& tri = mesh.triangles[t];
    const Vec2 a = mesh.nodes[tri[0]];
    const Vec2 b = mesh.nodes[tri[1]];
    const Vec2 c = mesh.nodes[tri[2]];
    const double denom = cross(b - a, c - a);
    const double lb = cross(p - a, c - a) / denom;
    const double lc = cross(b - a, p - a) / denom;
    const double la = 1.0 - lb - lc;
    bary = {la, lb, lc};
    return la >= -kContainTol && lb >= -kContainTol && lc >= -kContainTol;
}

PointLocation clamp_location(int t, std::array<double, 3> bary) {
    double sum = 0.0;
    for (double& l : bary) {
        if (l < 0.0) l = 0.0;
        sum += l;
    }
    for (double& l : bary) l /= sum;
    return {t, bary};
}

}  // namespace

PointLocation locate_point(const Mesh& mesh, Vec2 p) {
    if (p[0] < -kContainTol || p[0] > 1.0 + kContainTol || p[1] < -kContainTol ||
        p[1] > 1.0 + kContainTol)
        throw std::domain_error("locate_point: point outside the unit square");

    // Candidate cells around floor(p * n); scanning them in (j, i) order,
    // lower triangle first, visits triangle indices in ascending order, so
    // the first hit matches an exhaustive lowest-index scan.
    const int n = mesh.n;
    const int i0 = static_cast<int>(std::floor(p[0] * n));
    const int j0 = static_cast<int>(std::floor(p[1] * n));
    std::array<double, 3> bary;
    for (int j = std::max(0, j0 - 1); j <= std::min(n - 1, j0 + 1); ++j) {
        for (int i = std::max(0, i0 - 1); i <= std::min(n - 1, i0 + 1); ++i) {
            const int base = 2 * (j * n + i);
            if (barycentric(mesh, base, p, bary)) return clamp_location(base, bary);
            if (barycentric(mesh, base + 1, p, bary)) return clamp_location(base + 1, bary);
        }
    }
    // Unreachable for points in the closed unit square; fall back to a full
    // scan before giving up.
    for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t)
        if (barycentric(mesh, t, p, bary)) return clamp_location(t, bary);
    throw std::logic_error("locate_point: no containing triangle found");
}

}  // namespace elastowave
