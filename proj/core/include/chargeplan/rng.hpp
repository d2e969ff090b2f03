#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace chargeplan::rng {

// mt19937_64 has a standardized output sequence, and the transforms below
// avoid std::*_distribution, whose sequences are implementation-defined.
// Together this makes every seeded draw bit-reproducible across toolchains.
using Engine = std::mt19937_64;

/// Uniform draw in [0, 1) with 53 random bits.
inline double unit(Engine& e) {
  return static_cast<double>(e() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& e, double lo, double hi) {
  return lo + (hi - lo) * unit(e);
}

/// Uniform index in [0, n). Modulo bias is negligible for n << 2^64.
inline std::size_t index(Engine& e, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(e() % n);
}

/// Standard normal via Box-Muller (two draws consumed per call).
inline double normal(Engine& e) {
  const double u1 = (static_cast<double>(e() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(e() >> 11) * 0x1.0p-53;
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

/// Decorrelated child seed for an independent stream (splitmix64 finalizer).
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace chargeplan::rng
