#pragma once

#include "vclone/clone_result.hpp"
#include "vclone/oracle.hpp"

namespace vclone {

// Exact cloning from Type-1 (location) probes.

// Classify the top edge of the box: returns the k sites whose regions meet
// it, spending at most max(2, 2k-1) probes (two corner probes plus the
// recursive bisector-crossing subdivision).
std::vector<Site> initialize_top_edge(Oracle& oracle);

// Sweep-line cloner with backtracking over a retroactive beach line.
// Probe budget 4n-3 for n >= 2; the n = 1 case needs 4 corner probes to
// prove uniqueness.
CloneResult clone_sweep(Oracle& oracle);

// Incremental (corner-seeded) cloner: every probe confirms a Voronoi
// vertex of the current diagram or discovers a site. At most 3n+1 probes,
// Theta(n^2) diagram-update work.
CloneResult clone_incremental(Oracle& oracle);

// Lower-bound construction: m/2 clustered bottom sites plus a geometrically
// descending column at x = delta. Running clone_incremental on it makes the
// cumulative cell-update count grow quadratically in m.
std::vector<Site> adversarial_quadratic_instance(std::size_t m, double delta);

// Largest delta the construction accepts for a given m (1/2^m until that
// drops below the float-safe floor).
double adversarial_quadratic_max_delta(std::size_t m);

}  // namespace vclone
