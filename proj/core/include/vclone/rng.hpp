#pragma once

#include <cstdint>
#include <random>

#include "vclone/geometry.hpp"

namespace vclone {

// mt19937_64 is specified exactly by the standard; we avoid the
// distribution classes (implementation-defined) so that seeded sampling,
// reports and instances are byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return gen_(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * n) % n; }

  Point2 point_in(const BoundingBox& box, double margin = 0.0) {
    return {uniform(box.lo.x + margin, box.hi.x - margin),
            uniform(box.lo.y + margin, box.hi.y - margin)};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace vclone
