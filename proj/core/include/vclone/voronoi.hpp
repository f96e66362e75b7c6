#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vclone/geometry.hpp"

namespace vclone {

struct Site {
  std::string label;
  Point2 location;
};

// Face label used on the outer side of box-boundary edges.
inline const std::string kOutsideLabel = "~outside";

// Convex polygon with per-edge provenance: src[i] names what bounds the edge
// pts[i] -> pts[i+1] (a neighboring site's label, or kOutsideLabel for a box
// side). Vertices are counterclockwise.
struct ConvexCell {
  std::vector<Point2> pts;
  std::vector<std::string> src;

  bool empty() const { return pts.size() < 3; }
  double area() const;
  // max signed distance of p outside any bounding halfplane (<0 strictly inside)
  double violation(Point2 p) const;
};

ConvexCell box_cell(const BoundingBox& box);

// Intersect cell with the halfplane of points closer to `own` than `other`,
// tagging any newly created edge with `tag`.
ConvexCell clip_to_nearer(const ConvexCell& cell, Point2 own, Point2 other,
                          const std::string& tag);

struct DiagramEdge {
  Point2 a, b;
  std::string left;   // face on the left of a->b
  std::string right;  // may be kOutsideLabel
  bool interior() const { return right != kOutsideLabel && left != kOutsideLabel; }
};

struct VoronoiDiagram {
  BoundingBox box;
  std::vector<Site> sites;
  std::map<std::string, ConvexCell> cells;
  std::vector<Point2> vertices;  // points where >= 3 faces meet
  std::vector<DiagramEdge> edges;
  std::map<std::string, std::vector<std::size_t>> faces;  // label -> edge ids

  // Point location by cell scan; ties (points on shared boundary) return
  // every incident label. Throws OutsideBox.
  std::vector<std::string> nearest(Point2 p) const;
};

// Assemble edge/vertex/face structure from per-site cells.
VoronoiDiagram diagram_from_cells(std::vector<Site> sites,
                                  std::map<std::string, ConvexCell> cells,
                                  const BoundingBox& box);

// Ground-truth construction: each face is the intersection of the box with
// the halfplanes toward every other site. O(n^2), deliberately independent
// of the sweep-based cloners it is used to check.
VoronoiDiagram build_reference(const std::vector<Site>& sites,
                               const BoundingBox& box);

struct DiagramDelta {
  bool site_set_match = false;       // label sets equal, displacement <= 10*tol
  double max_site_displacement = 0;  // over matched labels (inf if sets differ)
  double skeleton_deviation = 0;     // max over sampled clone-edge points
  double face_label_agreement = 0;   // fraction of agreeing sample points
};

DiagramDelta compare(const VoronoiDiagram& clone,
                     const VoronoiDiagram& reference, std::size_t samples,
                     std::uint64_t seed = 1);

// Labels of reference faces whose cells meet the top edge of the box.
std::vector<std::string> top_edge_labels(const VoronoiDiagram& d);

}  // namespace vclone
