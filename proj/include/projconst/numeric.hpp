#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>

namespace projconst {

// sgn with the convention sgn(0) = 1.
inline double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Unit-modulus direction of z, with sgn(0) = 1.
inline std::complex<double> sgn(const std::complex<double>& z) {
  const double m = std::abs(z);
  if (m == 0.0) return {1.0, 0.0};
  return z / m;
}

inline double conj_scalar(double x) { return x; }
inline std::complex<double> conj_scalar(const std::complex<double>& z) {
  return std::conj(z);
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const std::complex<double>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

// Deterministic uniform variates from raw 64-bit engine output. The standard
// distributions are implementation-defined, so sweeps and tests draw through
// these instead.
template <class Engine>
double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Engine>
double uniform_symmetric(Engine& rng) {
  return 2.0 * uniform01(rng) - 1.0;
}

// Uniform integer in [0, n). Unbiased for n that divides 2^64; otherwise uses
// rejection.
template <class Engine>
std::uint64_t uniform_index(Engine& rng, std::uint64_t n) {
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

}  // namespace projconst
