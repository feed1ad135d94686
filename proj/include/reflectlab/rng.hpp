#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace reflectlab {

/// SplitMix64 stream. Same seed gives the same uint64/double stream on every
/// platform; reports name it as "splitmix64".
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Modulus uniform in [rlo, rhi], phase uniform in [0, 2pi).
  std::complex<double> annulus(double rlo = 0.6, double rhi = 1.8) {
    const double r = uniform(rlo, rhi);
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return {r * std::cos(th), r * std::sin(th)};
  }

  /// Re and Im uniform in [-1, 1].
  std::complex<double> box() {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kRngAlgorithm = "splitmix64";

/// FNV-1a, used to derive per-suite substreams and config hashes.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace reflectlab
