#pragma once

#include "sphedra/polyhedron.hpp"

namespace sphedra {

// Observed-versus-ideal audit of a polyhedron. The ideal is the inscribed
// maximizer that is combinatorially equivalent to the observed hull:
// regular tetrahedron for simplices, the optimal 5-pyramid, the optimal
// v-bipyramid, plus the octahedron and icosahedron recognized by their
// face-lattice signature. When no catalogued ideal applies, ideal_known is
// false and the ideal/discrepancy fields are NaN (no exception is thrown).
struct DiscrepancyReport {
  double observed_area = 0.0;
  double observed_volume = 0.0;
  double ideal_area = 0.0;
  double ideal_volume = 0.0;
  double surface_discrepancy = 0.0;  // 1 - observed_area / ideal_area
  double volume_discrepancy = 0.0;   // 1 - observed_volume / ideal_volume
  CombinatorialType type;
  bool ideal_known = false;
};

// Full evaluation. With renormalize (the default) the vertices are first
// projected onto the unit sphere and the hull rebuilt, matching the
// inscribed setting the ideals assume. With renormalize = false the raw
// quantities are reported and ideal_known is forced false.
DiscrepancyReport discrepancy_report(const Polyhedron& p,
                                     bool renormalize = true);

// Convenience entry points; both return the complete report, which carries
// each discrepancy alongside the shared observed/ideal quantities.
DiscrepancyReport surface_discrepancy(const Polyhedron& p);
DiscrepancyReport volume_discrepancy(const Polyhedron& p);

}  // namespace sphedra
