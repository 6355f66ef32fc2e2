#pragma once

#include <cstdint>

// Random source for the whole project.
//
// Every stochastic component draws from xoshiro256** 1.0 (Blackman/Vigna,
// public domain), seeded through splitmix64. Sub-streams are derived with
// child_seed(), a splitmix-style avalanche mix, so that a single 64-bit seed
// reproduces every series, world and experiment cell bit-for-bit.

namespace talab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Stafford mix13). Bijective on u64.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Child stream derivation: child_seed(base, label) = mix64(base + G*(label+1)).
// Distinct labels give independent-looking streams from one base seed.
constexpr std::uint64_t child_seed(std::uint64_t base, std::uint64_t label) noexcept {
  return mix64(base + kGoldenGamma * (label + 1));
}

// FNV-1a 64-bit, used to label streams by string (experiment cell keys).
constexpr std::uint64_t fnv1a64(const char* data, std::size_t len) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001B3ull;
  }
  return h;
}

struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state += kGoldenGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// xoshiro256** 1.0. State is seeded from four splitmix64 outputs as
// recommended by the authors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1): top 53 bits scaled by 2^-53.
  double uniform01() noexcept { return (next() >> 11) * 0x1.0p-53; }

  // Uniform on [-1, 1).
  double uniform_pm1() noexcept { return 2.0 * uniform01() - 1.0; }

  double uniform(double lo, double hi) noexcept { return lo + uniform01() * (hi - lo); }

  // Uniform integer in [0, n). Lemire multiply-shift; n must be > 0.
  std::uint64_t bounded(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace talab
