#pragma once

#include <cmath>

namespace sphedra {

// Plain 3-vector value type. Everything downstream treats these as
// immutable values; all operations are free functions or operators.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

constexpr Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}

constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }

constexpr Vec3 operator/(const Vec3& a, double s) {
  return {a.x / s, a.y / s, a.z / s};
}

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

constexpr double squared_norm(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(squared_norm(a)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

inline constexpr Vec3 kUnitX{1.0, 0.0, 0.0};
inline constexpr Vec3 kUnitY{0.0, 1.0, 0.0};
inline constexpr Vec3 kUnitZ{0.0, 0.0, 1.0};

// Equatorial companions of kUnitX: the three together are the cube roots of
// unity in the z = 0 plane. With the two poles they form the five-vertex
// triangular bipyramid of maximal surface area.
inline constexpr Vec3 kEquatorThird1{-0.5, 0.86602540378443864676, 0.0};
inline constexpr Vec3 kEquatorThird2{-0.5, -0.86602540378443864676, 0.0};

}  // namespace sphedra
