#pragma once

#include <string>

#include "vclone/voronoi.hpp"

namespace vclone {

// Visual aid only: edges as segments, sites as dots, vertices as rings.
// When a reference is given it is drawn dashed under the main diagram.
void write_svg(const std::string& path, const VoronoiDiagram& diagram,
               const VoronoiDiagram* reference = nullptr);

}  // namespace vclone
