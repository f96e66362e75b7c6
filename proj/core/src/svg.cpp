#include "vclone/svg.hpp"

#include <fstream>

namespace vclone {

namespace {

constexpr double kScale = 640.0;

double sx(const VoronoiDiagram& d, double x) {
  return (x - d.box.lo.x) / d.box.width() * kScale;
}
double sy(const VoronoiDiagram& d, double y) {
  return (d.box.hi.y - y) / d.box.height() * kScale;  // flip: svg y grows down
}

void draw(std::ofstream& out, const VoronoiDiagram& d, const char* stroke,
          const char* dash, bool with_sites) {
  for (const DiagramEdge& e : d.edges) {
    out << "<line x1='" << sx(d, e.a.x) << "' y1='" << sy(d, e.a.y)
        << "' x2='" << sx(d, e.b.x) << "' y2='" << sy(d, e.b.y)
        << "' stroke='" << stroke << "' stroke-width='1'" << dash << "/>\n";
  }
  if (with_sites) {
    for (const Site& s : d.sites) {
      out << "<circle cx='" << sx(d, s.location.x) << "' cy='"
          << sy(d, s.location.y) << "' r='2.5' fill='#c0392b'/>\n";
    }
    for (Point2 v : d.vertices) {
      out << "<circle cx='" << sx(d, v.x) << "' cy='" << sy(d, v.y)
          << "' r='3.5' fill='none' stroke='#2980b9'/>\n";
    }
  }
}

}  // namespace

void write_svg(const std::string& path, const VoronoiDiagram& diagram,
               const VoronoiDiagram* reference) {
  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kScale
      << "' height='" << kScale << "' viewBox='0 0 " << kScale << " "
      << kScale << "'>\n";
  out << "<rect width='" << kScale << "' height='" << kScale
      << "' fill='white'/>\n";
  if (reference) {
    draw(out, *reference, "#999999", " stroke-dasharray='4 3'", false);
  }
  draw(out, diagram, "#222222", "", true);
  out << "</svg>\n";
}

}  // namespace vclone
