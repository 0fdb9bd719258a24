#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sphedra/ideal.hpp"
#include "sphedra/polyhedron.hpp"

namespace sphedra {

enum class Objective { kArea, kVolume };

// v points as (theta, phi) pairs, theta measured from +z. The gauge pins
// point 0 to the north pole and point 1 to the phi = 0 meridian, removing
// the rotation group; the free parameters are theta_1 plus both angles of
// points 2..v-1, 2v - 3 in total. Any shape can be represented: gauging
// only rotates it.
struct SphericalConfig {
  std::vector<std::array<double, 2>> angles;

  std::vector<UnitPoint> to_points() const;

  // Rotates an arbitrary configuration into the gauge (first point to the
  // pole, second to azimuth 0) and records the angles. The rotation leaves
  // hull area and volume unchanged.
  static SphericalConfig from_points(std::span<const Vec3> points);
};

// Flattened free-parameter view used by the optimizer; exposed so tests
// can probe directional derivatives through the same chart.
std::vector<double> to_free_parameters(const SphericalConfig& c);
SphericalConfig from_free_parameters(int v, std::span<const double> params);

// Hull area or volume of the configuration; degenerate configurations
// (coincident or coplanar points) score 0 so ascent moves away from them.
double objective(const SphericalConfig& c, Objective kind);

struct LocalOptimizeResult {
  SphericalConfig config;
  double value = 0.0;
  int iterations = 0;
  // False when the iteration cap was hit or the run never left the
  // degenerate floor; never signalled by exception.
  bool converged = false;
  // Objective after the start and after every accepted step; the sequence
  // is non-decreasing by construction.
  std::vector<double> accepted_values;
};

// Steepest ascent on the free parameters with central finite-difference
// gradients (step 1e-6) and a halving/doubling step-size schedule: initial
// 0.1 rad, halved on rejection, capped re-growth on acceptance, floor
// 1e-10. Stops when the gradient norm drops below tol, the step floor is
// reached, or after 10^4 iterations.
LocalOptimizeResult local_optimize(const SphericalConfig& start,
                                   Objective kind, double tol);

struct SearchResult {
  SphericalConfig best_config;
  double best_value = 0.0;
  Objective objective = Objective::kArea;
  int restarts_used = 0;
  // Fraction of restarts finishing within 1e-6 of the best value found.
  double converged_fraction = 0.0;
  // Final objective value of each restart, in restart order.
  std::vector<double> trace;
};

// Best of `restarts` local runs from uniform-on-sphere starts (normalized
// Gaussian triples). Deterministic for a given seed: every restart derives
// its own generator from (seed, restart index), and the reduction is
// ordered by index, so serial and parallel execution agree.
SearchResult multi_start(int v, Objective kind, int restarts, uint64_t seed);

struct CapSearchResult {
  CapGeometry cap;           // h, base radius, and the best apex height t
  std::vector<Vec3> base;    // base vertices in azimuth order
  Vec3 apex;
  double best_value = 0.0;   // maximal lateral area found
  double bound = 0.0;        // pyramid_lateral_bound(v, h) for comparison
  int restarts_used = 0;
  double converged_fraction = 0.0;
  std::vector<double> trace;
};

// Maximizes the lateral area of a v-vertex pyramid whose v-1 base vertices
// lie in the plane z = 1 - h inside the ball and whose apex lies in the
// cap above it, by multi-start projected gradient ascent. The base polygon
// is read in azimuth order; radii, apex height and apex offset are clamped
// to the cap. The optimum should meet pyramid_lateral_bound(v, h).
CapSearchResult constrained_cap_search(int v, double h, int restarts,
                                       uint64_t seed);

}  // namespace sphedra
