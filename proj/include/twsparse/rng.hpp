#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace twsparse {

/// Seeded stream with platform-independent derived draws. The standard
/// distributions are implementation-defined, so uniform and normal variates
/// are computed here directly from the raw 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      spare_ = false;
      return cached_;
    }
    double u1;
    do {
      u1 = unit();
    } while (u1 <= 0.0);
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Independent substream for index `i`, derived with splitmix64.
  Rng fork(std::uint64_t i) const {
    std::uint64_t z = seed_hint() + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_hint() const {
    std::mt19937_64 copy = eng_;
    return copy();
  }

  std::mt19937_64 eng_;
  bool spare_ = false;
  double cached_ = 0.0;
};

}  // namespace twsparse
