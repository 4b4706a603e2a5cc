#pragma once

#include <cstdint>
#include <random>

namespace tinysample {

using Rng = std::mt19937_64;

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Independent sub-seed for stream `stream` of a run seeded with `seed`:
// mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound); bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

}  // namespace tinysample
