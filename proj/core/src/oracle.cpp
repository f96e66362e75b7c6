#include "vclone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

namespace vclone {

Oracle::Oracle(std::vector<Site> sites, BoundingBox box)
    : sites_(std::move(sites)), box_(box) {
  if (sites_.empty()) throw DegenerateInstance("oracle: empty site set");
  for (const Site& s : sites_) {
    if (!box_.contains(s.location))
      throw OutsideBox("oracle: site outside bounding box");
  }
}

ProbeResponse Oracle::probe(int level, Point2 p) {
  if (level < 1 || level > 3) throw InvalidParameters("probe: bad level");
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw OutsideBox("probe: non-finite probe point");

  double best = std::numeric_limits<double>::infinity();
  for (const Site& s : sites_) best = std::min(best, dist(p, s.location));

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (dist(p, sites_[i].location) <= best + kTieTol) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return sites_[a].label < sites_[b].label;
  });

  ProbeResponse r;
  r.level = level;
  for (std::size_t i : idx) r.labels.push_back(sites_[i].label);
  if (level <= 2) r.distance = best;
  if (level == 1)
    for (std::size_t i : idx) r.locations.push_back(sites_[i].location);

  log_.records.push_back({level, p, r, phase_});
  log_.count_by_level[level]++;
  return r;
}

void Oracle::export_trace(std::ostream& out) const {
  for (const ProbeRecord& rec : log_.records) {
    nlohmann::json j;
    j["level"] = rec.level;
    j["px"] = rec.p.x;
    j["py"] = rec.p.y;
    j["labels"] = rec.response.labels;
    if (rec.level <= 2) j["distance"] = rec.response.distance;
    if (rec.level == 1) {
      nlohmann::json locs = nlohmann::json::array();
      for (Point2 q : rec.response.locations) locs.push_back({q.x, q.y});
      j["locations"] = locs;
    }
    j["phase"] = rec.phase;
    out << j.dump() << "\n";
  }
}

}  // namespace vclone
