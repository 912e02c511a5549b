#pragma once

// Seeded generators for property tests. Everything is derived from raw
// 64-bit draws so sequences are identical across standard libraries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace hbtest {

using cd = std::complex<double>;

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }

  // Uniform in the square [-r, r]^2.
  cd box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  // Uniform in the disc of radius r, by rejection from the box.
  cd disc(double r) {
    for (;;) {
      const cd z = box(r);
      if (std::abs(z) <= r) return z;
    }
  }
  cd unimodular() { return std::polar(1.0, angle()); }

  std::vector<cd> complex_vector(std::size_t n, double r) {
    std::vector<cd> v(n);
    for (auto& z : v) z = box(r);
    return v;
  }

 private:
  std::uint64_t state_;
};

// (A, B) with conj(A) B = -(1 + |A|^2) and |A| in [lo, hi].
inline std::pair<cd, cd> admissible_pair(SplitMix& g, double lo = 0.2, double hi = 3.0) {
  const cd a = std::polar(g.uniform(lo, hi), g.angle());
  return {a, -(1.0 + std::norm(a)) / std::conj(a)};
}

// |A|, |B| <= 3 with B bounded away from 0.
inline std::pair<cd, cd> simple_pole_pair(SplitMix& g) {
  cd b;
  do {
    b = g.disc(3.0);
  } while (std::abs(b) < 1e-3);
  return {g.disc(3.0), b};
}

}  // namespace hbtest
