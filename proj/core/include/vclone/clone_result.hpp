#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vclone/voronoi.hpp"

namespace vclone {

// Append-only journal of probe-verified structure. Once confirmed, a
// feature is final: later discoveries may invalidate tentative events but
// never confirmed ones.
struct Feature {
  enum Kind { kEdge, kVertex };
  Kind kind;
  std::vector<std::string> labels;  // sorted; 2 for edges, 3 for vertices
  Point2 location;                  // vertex position / witness probe point
};

struct CloneResult {
  VoronoiDiagram diagram;
  std::vector<Site> sites;  // discovered sites (exact for type 1/2)
  std::size_t probes = 0;
  std::size_t bound = 0;  // probe budget implied by the discovered n
  std::size_t backtracks = 0;
  std::size_t k_top = 0;  // regions meeting the top edge (sweep cloners)
  std::vector<Feature> confirmed;

  // incremental cloner: cumulative count of cell builds/rebuilds
  std::size_t cell_updates = 0;

  // type-2: probes by phase {init, locate, vertex, edge}
  std::size_t phase_init = 0, phase_locate = 0, phase_vertex = 0,
              phase_edge = 0;

  // type-3
  double epsilon = 0.0;
  std::size_t discovered_labels = 0;  // N

  bool budget_ok() const { return probes <= bound; }
};

}  // namespace vclone
