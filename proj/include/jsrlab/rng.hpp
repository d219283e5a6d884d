#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace jsrlab {

// Deterministic generator (splitmix64 core). Independent of the standard
// library's distribution implementations, so streams are identical on every
// platform given the same seed. Substreams are derived by counter splitting:
// substream(seed, k) and substream(seed, j) are decorrelated for k != j,
// which makes per-trial results independent of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // warm up so that small seeds don't produce correlated first draws
    next();
    next();
  }

  static Rng substream(std::uint64_t seed, std::uint64_t counter) {
    return Rng(mix(seed, counter));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1].
  double u01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * (u01() - 0x1.0p-53); }

  int uniform_int(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Standard real normal via Box-Muller.
  double normal() {
    double u1 = u01();
    double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Standard complex normal: E|z|^2 = 1.
  std::complex<double> cnormal() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return {normal() * inv_sqrt2, normal() * inv_sqrt2};
  }

  std::complex<double> unit_phase() {
    double t = uniform(0.0, 6.283185307179586476925286766559);
    return {std::cos(t), std::sin(t)};
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull);
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return z ^ (z >> 33);
  }

  std::uint64_t state_;
};

}  // namespace jsrlab
