#include "sphedra/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "sphedra/ideal.hpp"

namespace sphedra {

namespace {

struct IdealPair {
  double area;
  double volume;
};

std::vector<int> vertex_degrees(const Polyhedron& p) {
  std::vector<int> deg(p.vertices.size(), 0);
  for (const auto& e : p.edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

// Volume of the regular icosahedron inscribed in the unit sphere; its
// surface area equals the v=12 bound, so both extremes are catalogued.
double icosahedron_volume() {
  const double s5 = std::sqrt(5.0);
  return 80.0 / 3.0 * (3.0 + s5) / std::pow(10.0 + 2.0 * s5, 1.5);
}

std::optional<IdealPair> lookup_ideal(const Polyhedron& hull,
                                      const CombinatorialType& type) {
  const int v = type.vertex_count;
  switch (type.family) {
    case Family::kSimplex:
      return IdealPair{8.0 / std::sqrt(3.0), 8.0 * std::sqrt(3.0) / 27.0};
    case Family::kPyramid:
      if (v == 5) {
        return IdealPair{
            pyramid_max_area(5),
            pyramid_volume_profile(5, kOptimalVolumePyramidHeight)};
      }
      return std::nullopt;  // optimal pyramids beyond v=5 stay unclaimed
    case Family::kBipyramid:
      return IdealPair{bipyramid_max_area(v), bipyramid_max_volume(v)};
    case Family::kOther:
      break;
  }

  // Two unlabeled but fully determined signatures: the octahedron (which
  // is the v=6 bipyramid: every vertex has degree 4, so no apex pair is
  // distinguished) and the icosahedron.
  const bool all_triangles =
      !type.facet_sizes.empty() && type.facet_sizes.back() == 3;
  if (!all_triangles) return std::nullopt;
  const auto deg = vertex_degrees(hull);
  if (v == 6 && type.edge_count == 12 && type.facet_count == 8 &&
      std::all_of(deg.begin(), deg.end(), [](int d) { return d == 4; })) {
    return IdealPair{bipyramid_max_area(6), bipyramid_max_volume(6)};
  }
  if (v == 12 && type.edge_count == 30 && type.facet_count == 20 &&
      std::all_of(deg.begin(), deg.end(), [](int d) { return d == 5; })) {
    return IdealPair{toth_bound(12, 30, 20), icosahedron_volume()};
  }
  return std::nullopt;
}

}  // namespace

DiscrepancyReport discrepancy_report(const Polyhedron& p, bool renormalize) {
  const Polyhedron* hull = &p;
  Polyhedron projected;
  if (renormalize) {
    std::vector<Vec3> pts;
    pts.reserve(p.vertices.size());
    for (const auto& v : p.vertices) pts.push_back(UnitPoint(v).vec());
    projected = convex_hull(pts);
    hull = &projected;
  }

  DiscrepancyReport r;
  r.type = classify(*hull);
  r.observed_area = surface_area(*hull);
  r.observed_volume = volume(*hull);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.ideal_area = nan;
  r.ideal_volume = nan;
  r.surface_discrepancy = nan;
  r.volume_discrepancy = nan;

  if (!renormalize) return r;  // raw quantities only
  const auto ideal = lookup_ideal(*hull, r.type);
  if (!ideal) return r;

  r.ideal_known = true;
  r.ideal_area = ideal->area;
  r.ideal_volume = ideal->volume;
  // The ideal is the family maximum, so the ratios cannot exceed 1 beyond
  // roundoff; clamp that noise to keep the deficits in [0, 1).
  r.surface_discrepancy = std::max(0.0, 1.0 - r.observed_area / ideal->area);
  r.volume_discrepancy =
      std::max(0.0, 1.0 - r.observed_volume / ideal->volume);
  return r;
}

DiscrepancyReport surface_discrepancy(const Polyhedron& p) {
  return discrepancy_report(p);
}

DiscrepancyReport volume_discrepancy(const Polyhedron& p) {
  return discrepancy_report(p);
}

}  // namespace sphedra
