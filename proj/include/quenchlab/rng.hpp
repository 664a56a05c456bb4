#pragma once

#include <cstdint>
#include <cmath>

namespace quenchlab {

// splitmix64 finalizer (Vigna / MurmurHash3 fmix64). Full-avalanche 64-bit
// mixer; also used on its own for seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

// SplitMix64: seedable generator with exactly 64 bits of state and a fixed,
// platform-independent output sequence. The standard library engines are
// portable but std::uniform_real_distribution is not, so the real-valued
// mappings are pinned here:
//
//   uniform01()      = (next() >> 11) * 2^-53              in [0, 1)
//   uniform(lo, hi)  = lo + (hi - lo) * uniform01()        in [lo, hi)
//   normal()         = Box-Muller, sqrt(-2 ln u1) * cos(2 pi u2), u1 in (0, 1];
//                      the sine partner is cached, so draws come in pairs.
//
// Every run/path owns its own generator; nothing here is shared or locked.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 shifted into (0, 1] so the log is always finite
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace quenchlab
