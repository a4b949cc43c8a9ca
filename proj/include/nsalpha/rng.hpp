#pragma once

#include "nsalpha/types.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace nsalpha {

/// Philox4x32-10 counter-based generator (Salmon et al.). A pure function of
/// (key, counter): no state, so streams indexed by (seed, path, step) are
/// identical under any scheduling or worker count.
struct Philox4x32 {
  static constexpr std::uint32_t kMult0 = 0xD2511F53u;
  static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

/// Uniform in (0,1) with 53 random bits from two 32-bit words.
inline Real uniform53(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<Real>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

/// Two standard Gaussians from one Philox block (Box-Muller).
inline std::array<Real, 2> gaussian_pair(std::uint64_t seed, std::uint32_t c0,
                                         std::uint32_t c1, std::uint32_t c2,
                                         std::uint32_t c3 = 0) {
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  const auto r = Philox4x32::block({c0, c1, c2, c3}, key);
  const Real u1 = uniform53(r[0], r[1]);
  const Real u2 = uniform53(r[2], r[3]);
  const Real radius = std::sqrt(-2.0 * std::log(u1));
  const Real angle = kTwoPi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Derives an independent stream seed; used to decorrelate per-point or
/// per-slice estimates that share a master seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace nsalpha
