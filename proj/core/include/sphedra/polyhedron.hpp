#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sphedra/vec3.hpp"

namespace sphedra {

// Numeric thresholds for hull construction. Inputs are unit-magnitude, so
// absolute cutoffs are meaningful.
inline constexpr double kOrientEps = 1e-10;          // orientation determinant cutoff
inline constexpr double kDuplicateEps = 1e-10;       // closer pairs are rejected
inline constexpr double kCoplanarMergeAngle = 1e-8;  // rad between facet normals
inline constexpr double kUnitNormTol = 1e-12;

// A point on the unit sphere. Construction renormalizes; the zero vector is
// rejected with DegenerateInput.
class UnitPoint {
 public:
  UnitPoint(double x, double y, double z);
  explicit UnitPoint(const Vec3& v);

  // theta: polar angle from +z in [0, pi]; phi: azimuth in [0, 2*pi).
  // Any real angles are accepted and reduced by periodicity.
  static UnitPoint from_polar(double theta, double phi);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

enum class Family { kSimplex, kPyramid, kBipyramid, kOther };

// Face-lattice summary used for combinatorial classification. The family
// detector recognizes simplices, pyramids (one (v-1)-gon base plus v-1
// triangles) and bipyramids (2(v-2) triangles with exactly two non-adjacent
// apex vertices of degree v-2); everything else is kOther.
struct CombinatorialType {
  int vertex_count = 0;
  int edge_count = 0;
  int facet_count = 0;
  std::vector<int> facet_sizes;  // sorted ascending
  Family family = Family::kOther;
};

// "simplex", "pyramid-5", "bipyramid-7", "other"
std::string family_label(const CombinatorialType& type);

// Convex polyhedron: vertex coordinates plus facet cycles, each cycle
// counterclockwise as seen from outside. `edges` lists every undirected
// vertex pair once, with the smaller index first.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> facets;
  std::vector<std::array<int, 2>> edges;
};

// Incremental-insertion convex hull. Coplanar adjacent triangles are merged
// into a single facet cycle, so a square-based pyramid comes back with one
// quadrilateral facet. The vertex set of the result equals the extreme
// points of the input. Throws DegenerateInput when the points are affinely
// dependent within tolerance or contain near-duplicates.
Polyhedron convex_hull(std::span<const Vec3> points);
Polyhedron convex_hull(std::span<const UnitPoint> points);

// Sum over facets of the polygon area (fan triangulation from the first
// cycle vertex; the value is independent of the cycle rotation).
double surface_area(const Polyhedron& p);

// Divergence-theorem volume from signed tetrahedra against the origin.
// Correct whether or not the hull contains the origin.
double volume(const Polyhedron& p);

CombinatorialType classify(const Polyhedron& p);

// Unit outward normal of a facet (Newell sum over the cycle).
Vec3 facet_unit_normal(const Polyhedron& p, int facet_index);

}  // namespace sphedra
