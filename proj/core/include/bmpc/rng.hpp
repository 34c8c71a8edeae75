#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bmpc {

// Deterministic stream splitting: every consumer of randomness derives its own
// generator from (master seed, stream tag), so adding layers or reordering
// consumers never perturbs the draws of existing streams.
//
// Streams are mt19937_64 seeded through SplitMix64; Gaussians come from a
// Box-Muller transform on 53-bit uniforms, so a stream's draw sequence is a
// pure function of (seed, tag).

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t tag) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ tag));
}

// Stream tags. Layer k uses tag kLayerBase + k.
inline constexpr std::uint64_t kTagUncertainty = 0x75ULL;
inline constexpr std::uint64_t kTagLayerBase = 0x1000ULL;

class NormalSampler {
 public:
  explicit NormalSampler(std::mt19937_64 gen) : gen_(gen) {}

  double uniform01() {
    // 53-bit mantissa uniform in (0,1]; never returns 0 so log() is safe.
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bmpc
