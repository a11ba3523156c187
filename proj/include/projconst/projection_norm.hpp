#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "projconst/functional.hpp"

namespace projconst {

/// Tolerance on |<f, y> - 1| below which y is accepted as defining a
/// projection onto ker f. Inputs are never rescaled to meet it.
inline constexpr double kPairingTol = 1e-10;

/// Per-coordinate breakdown of the norm of P_y x = x - <f, x> y.
///
/// per_coord[j] = |1 - h_j y_j| + |y_j| (1 - |h_j|) is the norm of the j-th
/// coordinate functional of P_y; tail_value = 1 + t covers the coordinates
/// beyond the atomic support, where the coordinate functional has norm
/// 1 + |y_j| and the supremum over the tail is 1 + t. The operator norm is
/// the maximum of all of these.
template <class Scalar>
struct BasicNormReport {
  std::vector<double> per_coord;
  double tail_value = 0.0;
  double norm = 0.0;
  Scalar pairing{};
};

using NormReport = BasicNormReport<double>;
using ComplexNormReport = BasicNormReport<std::complex<double>>;

/// <f, y> = sum_j h_j y_j + gamma * s.
template <class Scalar>
Scalar pairing(const BasicHyperplaneFunctional<Scalar>& f,
               const BasicExtendedVector<Scalar>& y) {
  if (f.atomic.size() != y.prefix.size()) {
    throw InputError("pairing: prefix/atomic length mismatch");
  }
  CompensatedSum re, im;
  for (std::size_t j = 0; j < f.atomic.size(); ++j) {
    const Scalar term = f.atomic[j] * y.prefix[j];
    re.add(std::real(term));
    im.add(std::imag(term));
  }
  const Scalar tail = Scalar(f.singular_weight) * y.tail_pair;
  re.add(std::real(tail));
  im.add(std::imag(tail));
  if constexpr (std::is_same_v<Scalar, double>) {
    return re.value();
  } else {
    return Scalar(re.value(), im.value());
  }
}

/// Exact operator norm of P_y x = x - <f, x> y on the modeled space.
/// Requires <f, y> = 1 within kPairingTol and |s| <= t.
template <class Scalar>
BasicNormReport<Scalar> operator_norm(const BasicHyperplaneFunctional<Scalar>& f,
                                      const BasicExtendedVector<Scalar>& y) {
  if (!y.tail_consistent()) {
    throw DomainError("operator_norm: |s| <= t violated");
  }
  BasicNormReport<Scalar> report;
  report.pairing = pairing(f, y);
  if (std::abs(report.pairing - Scalar(1)) > kPairingTol) {
    throw DomainError("operator_norm: not a projection onto ker f");
  }
  report.per_coord.reserve(f.atomic.size());
  for (std::size_t j = 0; j < f.atomic.size(); ++j) {
    const double value = std::abs(Scalar(1) - f.atomic[j] * y.prefix[j]) +
                         std::abs(y.prefix[j]) * (1.0 - std::abs(f.atomic[j]));
    report.per_coord.push_back(value);
  }
  report.tail_value = 1.0 + y.tail_mag;
  report.norm = report.tail_value;
  for (double v : report.per_coord) report.norm = std::max(report.norm, v);
  return report;
}

/// Independent oracle for operator_norm: maximizes ||P_y x||_inf over the
/// extreme points x in {-1,+1}^(m + tail_coords) of a finite truncation, with
/// the tail of y materialized as alternating +t, -t coordinates. Coordinates
/// beyond the truncation contribute exactly 1 (there y_j = 0 and h_j = 0),
/// and the singular part pairs to zero with finitely supported vectors, so
/// for gamma > 0 the result under-approximates the true norm. For gamma = 0
/// and tail_coords = 0 it equals operator_norm(f, y).norm.
double brute_force_norm(const HyperplaneFunctional& f, const ExtendedVector& y,
                        int tail_coords);

/// Coordinate-wise real part: prefix -> Re prefix, s -> Re s, t unchanged.
/// Requires real nonnegative atomic coefficients (sign-normalize first) and
/// <f, w> = 1. The result still pairs to 1 and its operator norm is no
/// larger.
ExtendedVector real_part_reduce(const ComplexHyperplaneFunctional& f,
                                const ComplexExtendedVector& w);

/// Truncated witness for the lower bound on ||P_y|| when f is purely
/// singular: a norm-one vector supported on one coordinate j with
/// |y_j| >= t - eps, completed by a far-tail vector x on which the singular
/// part takes a value >= 1 - eps. Evaluating P at it gives
/// ||P|| >= 1 + (1 - eps)(t - eps).
struct LowerBoundWitness {
  double epsilon = 0.0;
  double coordinate_mag = 0.0;   // |y_j| floor used on the chosen coordinate
  double pairing_floor = 0.0;    // 1 - eps, the guaranteed singular value
  double bound = 0.0;            // 1 + (1 - eps)(t - eps)
  std::string description;
};

LowerBoundWitness lower_bound_witness(const HyperplaneFunctional& f,
                                      const ExtendedVector& y, double eps);

}  // namespace projconst
