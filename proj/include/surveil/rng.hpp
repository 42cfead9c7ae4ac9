#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace surveil {

// Deterministic keyed PRNG (splitmix64 core). Every random quantity in the
// system is drawn from a generator keyed by (seed, stream tag, entity ids),
// so results do not depend on call order, thread count, or platform.
class DetRng {
 public:
  explicit DetRng(std::initializer_list<std::uint64_t> keys) {
    state_ = 0x243f6a8885a308d3ULL;
    for (std::uint64_t k : keys) {
      state_ ^= k + 0x9e3779b97f4a7c15ULL + (state_ << 6) + (state_ >> 2);
      next_u64();
    }
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, 1].  Never returns an exact 0; used where log() is taken.
  double next_open() {
    double u = next_double();
    return u > 0.0 ? u : 0x1.0p-53;
  }

  std::uint64_t next_below(std::uint64_t n) {
    // Modulo bias is negligible for the ranges used here (n << 2^64).
    return n == 0 ? 0 : next_u64() % n;
  }

  double normal() {
    // Box-Muller; one value per call keeps draws call-order independent.
    double u1 = next_open();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Marsaglia-Tsang; shape < 1 handled by the boost transform.
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = next_open();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = next_open();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v;
      }
    }
  }

  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
  }

  // Knuth's product method; lambdas in this project are small.
  long poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    double limit = std::exp(-lambda);
    long k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= next_open();
    } while (p > limit);
    return k - 1;
  }

 private:
  std::uint64_t state_;
};

}  // namespace surveil
