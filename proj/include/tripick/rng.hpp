#pragma once

#include <cstdint>
#include <random>

namespace tripick {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of substream `index` under the root `seed`.
inline constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0xD1B54A32D192ED03ULL));
}

using Engine = std::mt19937_64;

inline Engine make_substream(std::uint64_t seed, std::uint64_t index) {
  return Engine(substream_seed(seed, index));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace tripick
