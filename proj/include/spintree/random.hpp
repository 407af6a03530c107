#pragma once

#include "spintree/heisenberg.hpp"
#include "spintree/vec3.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace spintree {

// Seeded generator with a hand-rolled Box-Muller normal, so that sampled
// configurations are identical across standard libraries (std::normal_distribution
// is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0,1], keeps the log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform on the unit sphere via normalized Gaussian triple.
  Vec3 unit_vector() {
    while (true) {
      Vec3 v{normal(), normal(), normal()};
      double n = v.norm();
      if (n > 1e-12) return {v.x / n, v.y / n, v.z / n};
    }
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline SpinConfiguration random_configuration(int n, Rng& rng) {
  std::vector<Vec3> s;
  s.reserve(n);
  for (int i = 0; i < n; ++i) s.push_back(rng.unit_vector());
  return SpinConfiguration::unit(std::move(s));
}

}  // namespace spintree
