#pragma once

#include <complex>
#include <random>
#include <vector>

#include "projconst/functional.hpp"
#include "projconst/numeric.hpp"
#include "projconst/projection_norm.hpp"
#include "projconst/sweep.hpp"

namespace projconst::testing {

// Purely atomic instance inside the hypothesis region. Two coordinates
// cannot both stay below 1/2 while summing to 1, so dimensions start at 3.
inline HyperplaneFunctional random_atomic_instance(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t m = 3 + uniform_index(rng, 6);
    std::vector<double> h(m);
    CompensatedSum norm;
    for (double& c : h) {
      c = uniform_symmetric(rng);
      norm.add(std::abs(c));
    }
    if (norm.value() < 1e-9) continue;
    bool ok = true;
    for (double& c : h) {
      c /= norm.value();
      ok = ok && std::abs(c) < 0.5 - 1e-9;
    }
    if (!ok) continue;
    return HyperplaneFunctional{std::move(h), 0.0, true};
  }
}

// Random y with <f, y> = 1 (up to rounding) and |s| <= t, built by scaling a
// raw draw by its pairing value.
inline ExtendedVector random_feasible_vector(std::mt19937_64& rng,
                                             const HyperplaneFunctional& f,
                                             bool with_tail = true) {
  for (;;) {
    ExtendedVector y;
    y.prefix.resize(f.dim());
    for (double& c : y.prefix) c = 2.0 * uniform_symmetric(rng);
    double s = 0.0;
    double t = 0.0;
    if (with_tail) {
      s = uniform_symmetric(rng);
      t = std::abs(s) + uniform01(rng);
    }
    y.tail_pair = s;
    y.tail_mag = t;
    const double p = pairing(f, y);
    if (std::abs(p) < 0.2) continue;
    for (double& c : y.prefix) c /= p;
    y.tail_pair /= p;
    y.tail_mag /= std::abs(p);
    return y;
  }
}

inline ComplexHyperplaneFunctional random_complex_functional(
    std::mt19937_64& rng) {
  // Real nonnegative atomic coefficients (the sign-normalized shape the
  // complex reduction expects) with a singular remainder.
  const std::size_t m = 1 + uniform_index(rng, 6);
  std::vector<double> mags(m);
  CompensatedSum norm;
  const double gamma = uniform01(rng) * 0.8;
  for (double& c : mags) {
    c = uniform01(rng) + 1e-3;
    norm.add(c);
  }
  ComplexHyperplaneFunctional f;
  f.singular_weight = gamma;
  f.singular_attains = true;
  const double scale = (1.0 - gamma) / norm.value();
  for (double c : mags) f.atomic.emplace_back(c * scale, 0.0);
  return f;
}

inline ComplexExtendedVector random_complex_feasible_vector(
    std::mt19937_64& rng, const ComplexHyperplaneFunctional& f) {
  for (;;) {
    ComplexExtendedVector w;
    w.prefix.resize(f.dim());
    for (std::complex<double>& c : w.prefix) {
      c = {2.0 * uniform_symmetric(rng), 2.0 * uniform_symmetric(rng)};
    }
    std::complex<double> s{uniform_symmetric(rng), uniform_symmetric(rng)};
    const double t = std::abs(s) + uniform01(rng);
    w.tail_pair = s;
    w.tail_mag = t;
    const std::complex<double> p = pairing(f, w);
    if (std::abs(p) < 0.2) continue;
    for (std::complex<double>& c : w.prefix) c /= p;
    w.tail_pair /= p;
    w.tail_mag /= std::abs(p);
    return w;
  }
}

}  // namespace projconst::testing
