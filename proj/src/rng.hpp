#pragma once

#include <cmath>
#include <cstdint>

#include "vec.hpp"

namespace spherex {

// xoshiro256** seeded through splitmix64. Bit-reproducible across platforms,
// which the byte-identical report contract relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      // splitmix64 step
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform point on the unit sphere in R^dim (dim 2 or 3). The dim-3 case
  // uses Marsaglia rejection so only sqrt is involved.
  Vec unit_vector(int dim) {
    if (dim == 2) {
      const double th = uniform(0.0, 2.0 * pi_);
      return Vec(std::cos(th), std::sin(th));
    }
    while (true) {
      const double u = uniform(-1.0, 1.0);
      const double v = uniform(-1.0, 1.0);
      const double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) continue;
      const double f = 2.0 * std::sqrt(1.0 - s);
      return Vec(u * f, v * f, 1.0 - 2.0 * s);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static constexpr double pi_ = 3.14159265358979323846;
  std::uint64_t state_[4] = {};
};

}  // namespace spherex
