#pragma once

#include <array>
#include <cmath>

namespace elastowave {

using Vec2 = std::array<double, 2>;
// Row-major 2x2 Jacobian: Mat2[a][b] = d field_a / d x_b.
using Mat2 = std::array<std::array<double, 2>, 2>;

inline double dot(Vec2 a, Vec2 b) { return a[0] * b[0] + a[1] * b[1]; }
inline double cross(Vec2 a, Vec2 b) { return a[0] * b[1] - a[1] * b[0]; }
inline double norm2(Vec2 a) { return std::sqrt(dot(a, a)); }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a[0], s * a[1]}; }

}  // namespace elastowave
