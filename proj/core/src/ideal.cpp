#include "sphedra/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphedra/errors.hpp"

namespace sphedra {

namespace {

constexpr double kPi = std::numbers::pi;

double cot(double x) { return std::cos(x) / std::sin(x); }

void require_vertex_count(int v, int minimum) {
  if (v < minimum) {
    throw DomainError("vertex count must be at least " +
                      std::to_string(minimum));
  }
}

void require_cap_height(double h) {
  if (!(h > 0.0 && h < 2.0)) {
    throw DomainError("cap height outside (0, 2)");
  }
}

// d/dh of pyramid_area_profile at fixed v. With u = 2h - h^2,
// F_v = a u + B sqrt(h^2 u + u^2 c^2), so
// F_v' = a u' + B (2 h u + h^2 u' + 2 u u' c^2) / (2 sqrt(h^2 u + u^2 c^2)).
// F_v'(1) = B / sqrt(1 + c^2) > 0 and F_v' -> -inf as h -> 2, so the
// maximizer is interior and derivative bisection is well posed.
double pyramid_area_profile_derivative(int v, double h) {
  const double k = static_cast<double>(v - 1);
  const double a = 0.5 * k * std::sin(2.0 * kPi / k);
  const double B = k * std::sin(kPi / k);
  const double c2 = std::cos(kPi / k) * std::cos(kPi / k);
  const double u = 2.0 * h - h * h;
  const double du = 2.0 - 2.0 * h;
  const double radicand = h * h * u + u * u * c2;
  return a * du +
         B * (2.0 * h * u + h * h * du + 2.0 * u * du * c2) /
             (2.0 * std::sqrt(radicand));
}

// Golden-section bracket of the F_v maximizer, used only to seed the
// derivative bisection below.
std::pair<double, double> golden_bracket(int v, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = pyramid_area_profile(v, x1);
  double f2 = pyramid_area_profile(v, x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = pyramid_area_profile(v, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = pyramid_area_profile(v, x1);
    }
  }
  return {a, b};
}

}  // namespace

double toth_bound(int v, int e, int f) {
  if (v - e + f != 2) {
    throw InvalidCounts("counts violate Euler's formula v - e + f = 2");
  }
  if (v < 4 || e < 6 || f < 4) {
    throw InvalidCounts("counts below the minimal polyhedron (4, 6, 4)");
  }
  const double ed = e, fd = f, vd = v;
  const double c1 = cot(kPi * fd / (2.0 * ed));
  const double c2 = cot(kPi * vd / (2.0 * ed));
  return ed * std::sin(kPi * fd / ed) * (1.0 - c1 * c1 * c2 * c2);
}

double g_bound(int v) {
  require_vertex_count(v, 4);
  const double vd = v;
  const double c = cot(kPi * vd / (6.0 * (vd - 2.0)));
  return 1.5 * std::sqrt(3.0) * (vd - 2.0) * (1.0 - c * c / 3.0);
}

double kgon_max_perimeter(int k, double circumradius) {
  if (k < 3) throw DomainError("polygon needs at least 3 vertices");
  if (!(circumradius > 0.0)) throw DomainError("circumradius must be positive");
  return 2.0 * k * circumradius * std::sin(kPi / k);
}

double kgon_max_area(int k, double circumradius) {
  if (k < 3) throw DomainError("polygon needs at least 3 vertices");
  if (!(circumradius > 0.0)) throw DomainError("circumradius must be positive");
  return 0.5 * k * circumradius * circumradius * std::sin(2.0 * kPi / k);
}

CapGeometry make_cap_geometry(double h, double t) {
  require_cap_height(h);
  if (!(t > 0.0 && t <= h)) {
    throw DomainError("apex height must lie in (0, h]");
  }
  return {h, std::sqrt(2.0 * h - h * h), t};
}

LateralDecomposition pyramid_lateral_decomposition(const Polyhedron& pyramid) {
  const CombinatorialType type = classify(pyramid);
  if (type.family != Family::kPyramid) {
    throw DomainError("polyhedron is not a pyramid with a designated base");
  }

  int base = -1;
  for (size_t f = 0; f < pyramid.facets.size(); ++f) {
    if (static_cast<int>(pyramid.facets[f].size()) == type.vertex_count - 1) {
      base = static_cast<int>(f);
    }
  }
  std::vector<char> in_base(pyramid.vertices.size(), 0);
  for (const int i : pyramid.facets[base]) in_base[i] = 1;
  int apex = -1;
  for (size_t i = 0; i < pyramid.vertices.size(); ++i) {
    if (!in_base[i]) apex = static_cast<int>(i);
  }

  const auto& cycle = pyramid.facets[base];
  const Vec3 n = facet_unit_normal(pyramid, base);  // outward: away from apex
  const Vec3& b0 = pyramid.vertices[cycle[0]];
  const Vec3& a = pyramid.vertices[apex];
  const double t = -dot(a - b0, n);
  const Vec3 q = a + t * n;  // apex projected into the base plane

  LateralDecomposition d;
  d.apex_height = t;
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i) {
    const Vec3& p = pyramid.vertices[cycle[i]];
    const Vec3& r = pyramid.vertices[cycle[(i + 1) % k]];
    const double side = distance(p, r);
    d.side_lengths.push_back(side);
    d.foot_lengths.push_back(norm(cross(r - p, q - p)) / side);
  }
  d.inradius = *std::min_element(d.foot_lengths.begin(), d.foot_lengths.end());
  return d;
}

bool validate_lateral_decomposition(const LateralDecomposition& d,
                                    double base_area) {
  if (d.side_lengths.empty() ||
      d.side_lengths.size() != d.foot_lengths.size()) {
    return false;
  }
  double twice_area = 0.0;
  for (size_t i = 0; i < d.side_lengths.size(); ++i) {
    twice_area += d.side_lengths[i] * d.foot_lengths[i];
  }
  if (std::abs(0.5 * twice_area - base_area) > kLateralAreaTol) return false;
  const auto [lo, hi] =
      std::minmax_element(d.foot_lengths.begin(), d.foot_lengths.end());
  return *hi - *lo < kEqualFootTol;
}

double pyramid_lateral_bound(int v, double h) {
  require_vertex_count(v, 4);
  require_cap_height(h);
  const double k = static_cast<double>(v - 1);
  const double s = std::sin(kPi / k);
  const double c = std::cos(kPi / k);
  return k * s * h * std::sqrt(2.0 - h) * std::sqrt(h * s * s + 2.0 * c * c);
}

double pyramid_area_profile(int v, double h) {
  require_vertex_count(v, 4);
  if (!(h >= 1.0 && h < 2.0)) throw DomainError("cap height outside [1, 2)");
  const double k = static_cast<double>(v - 1);
  const double u = 2.0 * h - h * h;
  const double c = std::cos(kPi / k);
  return 0.5 * k * u * std::sin(2.0 * kPi / k) +
         k * std::sin(kPi / k) * std::sqrt(h * h * u + u * u * c * c);
}

double optimal_pyramid_height(int v) {
  require_vertex_count(v, 4);
  if (v == 5) return pyramid_height_roots5().maximizer;

  auto [lo, hi] = golden_bracket(v, 1.0, 2.0 - 1e-9);
  if (!(pyramid_area_profile_derivative(v, lo) > 0.0 &&
        pyramid_area_profile_derivative(v, hi) < 0.0)) {
    lo = 1.0;
    hi = 2.0 - 1e-9;
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (pyramid_area_profile_derivative(v, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

PyramidHeightRoots pyramid_height_roots5() {
  // Trigonometric roots of 2h^3 - 2h^2 - 7h + 8 = 0; the third real root
  // is negative and outside the geometry.
  const double s46 = std::sqrt(46.0);
  const double phi = std::acos(-149.0 / (23.0 * s46)) / 3.0;
  const double maximizer = (1.0 - s46 * std::sin(kPi / 6.0 - phi)) / 3.0;
  const double rival = (1.0 + s46 * std::cos(phi)) / 3.0;
  return {maximizer, rival};
}

double pyramid_max_area(int v) {
  return pyramid_area_profile(v, optimal_pyramid_height(v));
}

Polyhedron build_ideal_pyramid(int v) {
  require_vertex_count(v, 4);
  const double eta = optimal_pyramid_height(v);
  const double z = 1.0 - eta;
  const double r = std::sqrt(2.0 * eta - eta * eta);
  std::vector<Vec3> pts;
  pts.push_back(kUnitZ);
  for (int i = 0; i < v - 1; ++i) {
    const double phi = 2.0 * kPi * i / (v - 1);
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return convex_hull(pts);
}

double bipyramid_area_profile(int v, double h) {
  require_vertex_count(v, 5);
  require_cap_height(h);
  const double w = kPi / (v - 2);
  const double u = 2.0 * h - h * h;
  const double c2 = std::cos(w) * std::cos(w);
  return (v - 2) * std::sin(w) *
         (std::sqrt(h * h * u + u * u * c2) +
          std::sqrt((2.0 - h) * (2.0 - h) * u + u * u * c2));
}

double bipyramid_max_area(int v) {
  require_vertex_count(v, 5);
  const double w = kPi / (v - 2);
  const double c = std::cos(w);
  return 2.0 * (v - 2) * std::sqrt(1.0 + c * c) * std::sin(w);
}

Polyhedron build_ideal_bipyramid(int v) {
  require_vertex_count(v, 5);
  std::vector<Vec3> pts;
  pts.push_back(kUnitZ);
  pts.push_back(-kUnitZ);
  for (int i = 0; i < v - 2; ++i) {
    const double phi = 2.0 * kPi * i / (v - 2);
    pts.push_back({std::cos(phi), std::sin(phi), 0.0});
  }
  return convex_hull(pts);
}

double pyramid_volume_profile(int v, double h) {
  require_vertex_count(v, 4);
  require_cap_height(h);
  const double k = static_cast<double>(v - 1);
  return k / 6.0 * (2.0 * h * h - h * h * h) * std::sin(2.0 * kPi / k);
}

double bipyramid_max_volume(int v) {
  require_vertex_count(v, 5);
  return (v - 2) / 3.0 * std::sin(2.0 * kPi / (v - 2));
}

}  // namespace sphedra
