#pragma once

#include <cstdint>
#include <random>

namespace lieorb {

/// Uniform-ish integer in [lo, hi]; defined on the raw engine output so the
/// sequence is identical across standard libraries for a given seed.
inline int draw_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

/// Nonzero integer in [-bound, bound].
inline int draw_nonzero(std::mt19937_64& rng, int bound) {
  const int v = draw_int(rng, 1, bound);
  return (rng() & 1u) ? v : -v;
}

}  // namespace lieorb
