#include "vclone/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "vclone/rng.hpp"

namespace vclone {

double ConvexCell::area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point2 a = pts[i], b = pts[(i + 1) % pts.size()];
    s += cross(a, b);
  }
  return 0.5 * s;
}

double ConvexCell::violation(Point2 p) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point2 a = pts[i], b = pts[(i + 1) % pts.size()];
    double len = dist(a, b);
    if (len <= kTol) continue;
    // CCW polygon: negative cross means p is right of a->b, i.e. outside
    double d = -cross(b - a, p - a) / len;
    worst = std::max(worst, d);
  }
  return worst;
}

ConvexCell box_cell(const BoundingBox& box) {
  ConvexCell c;
  c.pts = {box.lo, {box.hi.x, box.lo.y}, box.hi, {box.lo.x, box.hi.y}};
  c.src = {kOutsideLabel, kOutsideLabel, kOutsideLabel, kOutsideLabel};
  return c;
}

namespace {

// drop near-coincident consecutive vertices, keeping the outgoing edge tag
// of the surviving (second) vertex
void dedupe_ring(ConvexCell& cell) {
  for (;;) {
    bool removed = false;
    for (std::size_t i = 0; i < cell.pts.size() && cell.pts.size() >= 3; ++i) {
      std::size_t j = (i + 1) % cell.pts.size();
      if (dist(cell.pts[i], cell.pts[j]) <= 1e-12) {
        cell.pts.erase(cell.pts.begin() + static_cast<long>(i));
        cell.src.erase(cell.src.begin() + static_cast<long>(i));
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
}

}  // namespace

ConvexCell clip_to_nearer(const ConvexCell& cell, Point2 own, Point2 other,
                          const std::string& tag) {
  // closer to own:  (other-own) . p  <  (|other|^2 - |own|^2)/2
  Point2 n = other - own;
  double c = 0.5 * (norm2(other) - norm2(own));
  auto f = [&](Point2 p) { return dot(n, p) - c; };

  ConvexCell out;
  std::size_t m = cell.pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    Point2 p = cell.pts[i], q = cell.pts[(i + 1) % m];
    const std::string& s = cell.src[i];
    double fp = f(p), fq = f(q);
    bool pin = fp <= 0.0, qin = fq <= 0.0;
    if (pin) {
      out.pts.push_back(p);
      if (qin) {
        out.src.push_back(s);
      } else {
        out.src.push_back(s);
        double t = fp / (fp - fq);
        out.pts.push_back(p + t * (q - p));
        out.src.push_back(tag);  // exiting: the cut line takes over
      }
    } else if (qin) {
      double t = fp / (fp - fq);
      out.pts.push_back(p + t * (q - p));
      out.src.push_back(s);  // entering: remainder of original edge
    }
  }
  dedupe_ring(out);
  if (out.pts.size() < 3) {
    out.pts.clear();
    out.src.clear();
  }
  return out;
}

std::vector<std::string> VoronoiDiagram::nearest(Point2 p) const {
  if (!box.contains(p, kTol)) throw OutsideBox("nearest: point outside box");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [label, cell] : cells) {
    if (cell.empty()) continue;
    best = std::min(best, cell.violation(p));
  }
  std::vector<std::string> out;
  for (const auto& [label, cell] : cells) {
    if (cell.empty()) continue;
    if (cell.violation(p) <= best + kTieTol) out.push_back(label);
  }
  return out;
}

VoronoiDiagram diagram_from_cells(std::vector<Site> sites,
                                  std::map<std::string, ConvexCell> cells,
                                  const BoundingBox& box) {
  VoronoiDiagram d;
  d.box = box;
  d.sites = std::move(sites);
  d.cells = std::move(cells);

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [label, cell] : d.cells) {
    std::size_t m = cell.pts.size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::string& neighbor = cell.src[i];
      Point2 a = cell.pts[i], b = cell.pts[(i + 1) % m];
      if (dist(a, b) <= kTol) continue;
      if (neighbor == kOutsideLabel) {
        d.edges.push_back({a, b, label, kOutsideLabel});
      } else {
        auto key = std::minmax(label, neighbor);
        if (!seen.insert({key.first, key.second}).second) continue;
        d.edges.push_back({a, b, label, neighbor});
      }
    }
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    d.faces[d.edges[e].left].push_back(e);
    if (d.edges[e].right != kOutsideLabel) d.faces[d.edges[e].right].push_back(e);
  }

  // cluster cell corners; a diagram vertex is a corner shared by >= 3 faces
  struct Corner {
    Point2 p;
    std::string label;
  };
  std::vector<Corner> corners;
  for (const auto& [label, cell] : d.cells)
    for (Point2 p : cell.pts) corners.push_back({p, label});
  std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) {
    if (a.p.x != b.p.x) return a.p.x < b.p.x;
    return a.p.y < b.p.y;
  });
  std::vector<bool> used(corners.size(), false);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (used[i]) continue;
    std::set<std::string> labels = {corners[i].label};
    Point2 rep = corners[i].p;
    for (std::size_t j = i + 1; j < corners.size(); ++j) {
      if (corners[j].p.x - corners[i].p.x > kTieTol) break;
      if (used[j]) continue;
      if (dist(corners[i].p, corners[j].p) <= kTieTol) {
        labels.insert(corners[j].label);
        used[j] = true;
      }
    }
    if (labels.size() >= 3) d.vertices.push_back(rep);
  }
  return d;
}

VoronoiDiagram build_reference(const std::vector<Site>& sites,
                               const BoundingBox& box) {
  if (sites.empty()) throw DegenerateInstance("build_reference: no sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (sites[i].label == sites[j].label ||
          dist(sites[i].location, sites[j].location) <= kTieTol) {
        throw DuplicateSites("build_reference: duplicate site " + sites[i].label);
      }
    }
  }
  std::map<std::string, ConvexCell> cells;
  for (const Site& s : sites) {
    ConvexCell cell = box_cell(box);
    for (const Site& t : sites) {
      if (t.label == s.label) continue;
      cell = clip_to_nearer(cell, s.location, t.location, t.label);
      if (cell.empty()) break;
    }
    cells[s.label] = std::move(cell);
  }
  return diagram_from_cells(sites, std::move(cells), box);
}

namespace {

double min_dist_to_interior_edges(Point2 p, const VoronoiDiagram& d) {
  double best = std::numeric_limits<double>::infinity();
  for (const DiagramEdge& e : d.edges) {
    if (!e.interior()) continue;
    best = std::min(best, point_segment_distance(p, e.a, e.b));
  }
  return best;
}

bool sets_intersect(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) return true;
  return false;
}

}  // namespace

DiagramDelta compare(const VoronoiDiagram& clone,
                     const VoronoiDiagram& reference, std::size_t samples,
                     std::uint64_t seed) {
  DiagramDelta delta;

  std::map<std::string, Point2> ref_sites;
  for (const Site& s : reference.sites) ref_sites[s.label] = s.location;
  bool labels_equal = clone.sites.size() == reference.sites.size();
  double disp = 0.0;
  for (const Site& s : clone.sites) {
    auto it = ref_sites.find(s.label);
    if (it == ref_sites.end()) {
      labels_equal = false;
      break;
    }
    disp = std::max(disp, dist(s.location, it->second));
  }
  delta.max_site_displacement =
      labels_equal ? disp : std::numeric_limits<double>::infinity();
  delta.site_set_match = labels_equal && disp <= kTieTol;

  // clone skeleton -> reference skeleton, sampled along interior edges
  double total_len = 0.0;
  for (const DiagramEdge& e : clone.edges)
    if (e.interior()) total_len += dist(e.a, e.b);
  double dev = 0.0;
  bool ref_has_interior = false;
  for (const DiagramEdge& e : reference.edges)
    if (e.interior()) ref_has_interior = true;
  if (total_len > 0.0 && ref_has_interior) {
    for (const DiagramEdge& e : clone.edges) {
      if (!e.interior()) continue;
      double len = dist(e.a, e.b);
      auto n = static_cast<std::size_t>(
          std::max(2.0, std::ceil(len / total_len * double(samples))));
      for (std::size_t i = 0; i <= n; ++i) {
        Point2 p = e.a + (double(i) / double(n)) * (e.b - e.a);
        dev = std::max(dev, min_dist_to_interior_edges(p, reference));
      }
    }
  } else if (total_len > 0.0 && !ref_has_interior) {
    dev = std::numeric_limits<double>::infinity();  // clone invented structure
  }
  delta.skeleton_deviation = dev;

  Rng rng(seed);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Point2 p = rng.point_in(reference.box);
    if (sets_intersect(clone.nearest(p), reference.nearest(p))) ++agree;
  }
  delta.face_label_agreement = samples ? double(agree) / double(samples) : 1.0;
  return delta;
}

std::vector<std::string> top_edge_labels(const VoronoiDiagram& d) {
  std::vector<std::string> out;
  double top = d.box.hi.y;
  for (const auto& [label, cell] : d.cells) {
    std::size_t m = cell.pts.size();
    for (std::size_t i = 0; i < m; ++i) {
      Point2 a = cell.pts[i], b = cell.pts[(i + 1) % m];
      // a positive-length polygon side lying on the top edge
      if (std::abs(a.y - top) <= kTieTol && std::abs(b.y - top) <= kTieTol &&
          dist(a, b) > kTieTol) {
        out.push_back(label);
        break;
      }
    }
  }
  return out;
}

}  // namespace vclone
