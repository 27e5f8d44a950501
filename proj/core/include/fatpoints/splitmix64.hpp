#pragma once

#include <cstdint>

namespace fatpoints {

/// The splitmix64 generator (public-domain constants).  Chosen for point
/// sampling because the whole stream is pinned by one 64-bit seed, making
/// every sampled point set reproducible across platforms and languages.
struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

}  // namespace fatpoints
