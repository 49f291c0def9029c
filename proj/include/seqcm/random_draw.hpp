#pragma once

#include <cstdint>
#include <random>

namespace seqcm {

// Portable uniform draw in [lo, hi]. std::uniform_int_distribution is
// implementation-defined, which would make seeded witnesses differ across
// standard libraries; reports must replay byte-identically everywhere.
inline int draw_int(std::mt19937_64& rng, int lo, int hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

}  // namespace seqcm
