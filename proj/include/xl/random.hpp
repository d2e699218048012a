#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace xl {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes a master seed with a tuple of stream coordinates.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t c : coords) h = splitmix64(h ^ splitmix64(c));
  return h;
}

/// Uniform integer in [0, bound) by rejection, so that streams are identical
/// across standard library implementations (uniform_int_distribution is not).
inline std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::uint32_t>(x % bound);
}

}  // namespace xl
