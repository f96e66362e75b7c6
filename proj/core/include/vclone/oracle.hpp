#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vclone/voronoi.hpp"

namespace vclone {

// One nearest-neighbor answer. Levels carry strictly decreasing information:
//   1: exact locations + labels of all co-nearest sites
//   2: distance + labels
//   3: labels only
struct ProbeResponse {
  int level = 3;
  std::vector<std::string> labels;     // all co-nearest, sorted
  double distance = -1.0;              // levels 1-2
  std::vector<Point2> locations;       // level 1, parallel to labels
};

struct ProbeRecord {
  int level;
  Point2 p;
  ProbeResponse response;
  std::string phase;  // algorithm-phase tag supplied by the cloner
};

struct ProbeLog {
  std::vector<ProbeRecord> records;
  std::size_t count_by_level[4] = {0, 0, 0, 0};  // [0] unused
  std::size_t total() const { return records.size(); }
};

// The simulated data owner. Cloners may interact with the hidden site set
// only through probe(); the set itself never leaves this class.
class Oracle {
 public:
  Oracle(std::vector<Site> sites, BoundingBox box);

  // Answers a nearest-neighbor query at any finite location. Sites are
  // confined to the box, probes are not: the sweep verifies beach-line
  // points and circumcenters that may fall outside it.
  ProbeResponse probe(int level, Point2 p);

  void set_phase(std::string phase) { phase_ = std::move(phase); }
  const BoundingBox& box() const { return box_; }

  // immutable snapshot of the accounting
  const ProbeLog& report() const { return log_; }
  std::size_t probe_count() const { return log_.total(); }

  // line-delimited JSON {level, px, py, labels, distance?, locations?, phase}
  void export_trace(std::ostream& out) const;

 private:
  std::vector<Site> sites_;
  BoundingBox box_;
  ProbeLog log_;
  std::string phase_;
};

}  // namespace vclone
