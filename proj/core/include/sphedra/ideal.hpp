#pragma once

#include <vector>

#include "sphedra/polyhedron.hpp"

namespace sphedra {

// Tolerances used when auditing a pyramid's lateral decomposition against
// the equal-foot optimality condition.
inline constexpr double kLateralAreaTol = 1e-10;
inline constexpr double kEqualFootTol = 1e-8;

// Critical height of the maximum-volume inscribed pyramid, for every vertex
// count; the area profile is not stationary there, which is what separates
// the two discrepancy measures.
inline constexpr double kOptimalVolumePyramidHeight = 4.0 / 3.0;

// Upper bound on the surface area of an inscribed polyhedron with the given
// counts, assuming the foot condition:
//   e * sin(pi f / e) * (1 - cot^2(pi f / 2e) * cot^2(pi v / 2e)).
// Throws InvalidCounts unless v - e + f = 2, v >= 4 and e >= 6.
double toth_bound(int v, int e, int f);

// The same bound specialized to v vertices (e = 3v - 6, f = 2v - 4):
//   G(v) = (3 sqrt(3) / 2)(v - 2)(1 - (1/3) cot^2(pi v / (6(v - 2)))).
double g_bound(int v);

// Extremal k-gons inscribed in a circle of radius R: the regular one
// maximizes both perimeter and area.
double kgon_max_perimeter(int k, double circumradius);
double kgon_max_area(int k, double circumradius);

// Spherical cap of height h over the base plane z = 1 - h, with an apex
// t above that plane. R is the base-circle radius, determined by h.
struct CapGeometry {
  double h = 0.0;  // cap height, in (0, 2)
  double R = 0.0;  // base-circle radius sqrt(2h - h^2)
  double t = 0.0;  // apex height above the base plane, in (0, h]
};

CapGeometry make_cap_geometry(double h, double t);

// Per-side data of a pyramid's lateral surface: side lengths s_i of the
// base polygon, foot lengths p_i from the apex's base-plane projection to
// each side line, apex height t above the base plane. Lateral area is
// (1/2) sum s_i sqrt(p_i^2 + t^2); base area is (1/2) sum s_i p_i when the
// projection falls inside the base.
struct LateralDecomposition {
  std::vector<double> side_lengths;
  std::vector<double> foot_lengths;
  double apex_height = 0.0;
  double inradius = 0.0;  // min foot length; equals every p_i at an optimum
};

// Extracts the decomposition from a polyhedron that classifies as a
// pyramid. Throws DomainError otherwise (a simplex has no designated base).
LateralDecomposition pyramid_lateral_decomposition(const Polyhedron& pyramid);

// True iff the decomposition matches the base area and satisfies the
// equal-foot condition that characterizes the lateral-area maximizer.
bool validate_lateral_decomposition(const LateralDecomposition& d,
                                    double base_area);

// Maximum lateral surface area over pyramids with v-1 base vertices in the
// base plane of a height-h cap and the apex inside the cap:
//   (v-1) sin(pi/(v-1)) h sqrt(2-h) sqrt(h sin^2(pi/(v-1)) + 2 cos^2(pi/(v-1))).
// Attained by the right pyramid over the regular (v-1)-gon inscribed in the
// base circle with its apex at the top of the cap.
double pyramid_lateral_bound(int v, double h);

// Total surface area F_v(h) of that optimal inscribed pyramid as a function
// of cap height h in [1, 2): base polygon area plus the lateral bound.
double pyramid_area_profile(int v, double h);

// The height maximizing F_v on [1, 2). Closed form for v = 5 (the real
// root of 2h^3 - 2h^2 - 7h + 8 in [1, 3/2]); derivative bisection to 1e-12
// for other v. For v = 4 this lands on 4/3 exactly.
double optimal_pyramid_height(int v);

// Both roots of the v = 5 height cubic that lie in (0, 2). Only
// `maximizer` is the argmax of F_5; `rival` solves the squared stationarity
// equation but scores a strictly smaller area.
struct PyramidHeightRoots {
  double maximizer = 0.0;
  double rival = 0.0;
};
PyramidHeightRoots pyramid_height_roots5();

double pyramid_max_area(int v);

// Apex at the north pole plus the regular (v-1)-gon in the plane
// z = 1 - optimal height, first base vertex at azimuth 0.
Polyhedron build_ideal_pyramid(int v);

// Surface area of the v-bipyramid whose regular (v-2)-gon sits in the
// plane z = 1 - h (inscribed in the sphere) with apexes at both poles:
//   (v-2) sin w (sqrt(2h^3 - h^4 + u^2 cos^2 w) + sqrt((2-h)^2 u + u^2 cos^2 w)),
// u = 2h - h^2, w = pi/(v-2). Symmetric about h = 1, maximized there.
double bipyramid_area_profile(int v, double h);

// 2 (v-2) sqrt(1 + cos^2(pi/(v-2))) sin(pi/(v-2)), the profile at h = 1.
double bipyramid_max_area(int v);

// Both poles plus the regular (v-2)-gon in the equator, first vertex at
// (1, 0, 0).
Polyhedron build_ideal_bipyramid(int v);

// Volume of the right pyramid over the regular (v-1)-gon at cap height h:
//   ((v-1)/6)(2h^2 - h^3) sin(2 pi / (v-1)).
// Maximized at h = 4/3 (kOptimalVolumePyramidHeight).
double pyramid_volume_profile(int v, double h);

// (1/3)(v-2) sin(2 pi / (v-2)); the area-maximal bipyramid (equatorial
// polygon, h = 1) also maximizes volume.
double bipyramid_max_volume(int v);

}  // namespace sphedra
