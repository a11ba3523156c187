#include "projconst/projection_norm.hpp"

#include <cstdint>

namespace projconst {

double brute_force_norm(const HyperplaneFunctional& f, const ExtendedVector& y,
                        int tail_coords) {
  if (f.atomic.size() != y.prefix.size()) {
    throw InputError("brute_force_norm: prefix/atomic length mismatch");
  }
  if (tail_coords < 0) throw DomainError("brute_force_norm: negative tail_coords");
  if (f.singular_weight > 0.0 && tail_coords < 1) {
    throw DomainError(
        "brute_force_norm: gamma > 0 requires at least one materialized tail "
        "coordinate");
  }
  const std::size_t m = f.atomic.size();
  const std::size_t total = m + static_cast<std::size_t>(tail_coords);
  if (total > 24) {
    throw DomainError("brute_force_norm: more than 24 coordinates refused");
  }

  std::vector<double> h(f.atomic.begin(), f.atomic.end());
  h.resize(total, 0.0);
  std::vector<double> yv(y.prefix.begin(), y.prefix.end());
  for (int k = 0; k < tail_coords; ++k) {
    yv.push_back(k % 2 == 0 ? y.tail_mag : -y.tail_mag);
  }

  // Coordinates beyond the truncation carry x_j = +-1 and y_j = 0, so every
  // extreme point reaches at least 1 there.
  double best = 1.0;
  const std::uint64_t patterns = std::uint64_t{1} << total;
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    double pair = 0.0;
    for (std::size_t j = 0; j < total; ++j) {
      pair += (bits >> j) & 1 ? h[j] : -h[j];
    }
    for (std::size_t j = 0; j < total; ++j) {
      const double xj = (bits >> j) & 1 ? 1.0 : -1.0;
      best = std::max(best, std::abs(xj - pair * yv[j]));
    }
  }
  return best;
}

ExtendedVector real_part_reduce(const ComplexHyperplaneFunctional& f,
                                const ComplexExtendedVector& w) {
  for (const std::complex<double>& c : f.atomic) {
    if (c.imag() != 0.0) {
      throw DomainError("real_part_reduce: non-real atomic coefficients");
    }
    if (c.real() < 0.0) {
      throw DomainError(
          "real_part_reduce: negative atomic coefficients (sign-normalize "
          "first)");
    }
  }
  if (std::abs(pairing(f, w) - std::complex<double>(1.0)) > kPairingTol) {
    throw DomainError("real_part_reduce: <f, w> must equal 1");
  }
  ExtendedVector out;
  out.prefix.reserve(w.prefix.size());
  for (const std::complex<double>& c : w.prefix) out.prefix.push_back(c.real());
  out.tail_mag = w.tail_mag;
  out.tail_pair = w.tail_pair.real();
  return out;
}

LowerBoundWitness lower_bound_witness(const HyperplaneFunctional& f,
                                      const ExtendedVector& y, double eps) {
  bool pure = f.singular_weight == 1.0;
  for (double c : f.atomic) pure = pure && c == 0.0;
  if (!pure) {
    throw DomainError("lower_bound_witness: functional must be purely singular");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("lower_bound_witness: eps must lie in (0, 1)");
  }
  if (std::abs(pairing(f, y) - 1.0) > kPairingTol) {
    throw DomainError("lower_bound_witness: <f, y> must equal 1");
  }
  LowerBoundWitness w;
  w.epsilon = eps;
  w.coordinate_mag = y.tail_mag - eps;
  w.pairing_floor = 1.0 - eps;
  w.bound = 1.0 + w.pairing_floor * w.coordinate_mag;
  w.description =
      "norm-one vector equal to -sgn(<g, x>) y_j on a coordinate j with "
      "|y_j| >= t - eps, plus a far-tail x of norm one with <g, x> >= 1 - eps; "
      "evaluating P_y at it bounds ||P_y|| from below by 1 + (1-eps)(t-eps)";
  return w;
}

}  // namespace projconst
