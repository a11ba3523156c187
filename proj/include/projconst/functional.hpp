#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "projconst/errors.hpp"
#include "projconst/numeric.hpp"

namespace projconst {

/// Norm-one functional f = h + g on the sup-norm sequence space, stored as a
/// finite atomic coefficient vector h_1..h_m together with the total mass of
/// the singular part and a flag recording whether that part attains its norm.
///
/// Invariants (enforced by `normalize`, assumed elsewhere):
///   - atomic_norm() + singular_weight == 1
///   - singular_weight == 0  =>  singular_attains == true
template <class Scalar>
struct BasicHyperplaneFunctional {
  std::vector<Scalar> atomic;
  double singular_weight = 0.0;
  bool singular_attains = true;

  std::size_t dim() const { return atomic.size(); }

  double atomic_norm() const {
    CompensatedSum acc;
    for (const Scalar& h : atomic) acc.add(std::abs(h));
    return acc.value();
  }

  double total_mass() const { return atomic_norm() + singular_weight; }

  bool is_normalized(double tol = 1e-12) const {
    return singular_weight >= 0.0 && std::abs(total_mass() - 1.0) <= tol;
  }

  /// Largest atomic coefficient modulus (0 for an empty atomic part).
  double atomic_sup() const {
    double m = 0.0;
    for (const Scalar& h : atomic) m = std::max(m, std::abs(h));
    return m;
  }
};

using HyperplaneFunctional = BasicHyperplaneFunctional<double>;
using ComplexHyperplaneFunctional =
    BasicHyperplaneFunctional<std::complex<double>>;

/// Finite model of a vector y in the sup-norm sequence space: an explicit
/// prefix matching the paired functional's atomic support, the limsup of the
/// remaining coordinate moduli (`tail_mag`, written t), and the value the
/// singular part takes on y divided by its weight (`tail_pair`, written s).
/// The model requires |s| <= t; pairing against a non-attaining singular part
/// additionally needs s == 0 or |s| < t strictly.
template <class Scalar>
struct BasicExtendedVector {
  std::vector<Scalar> prefix;
  double tail_mag = 0.0;
  Scalar tail_pair{};

  std::size_t dim() const { return prefix.size(); }

  double sup_norm() const {
    double m = tail_mag;
    for (const Scalar& y : prefix) m = std::max(m, std::abs(y));
    return m;
  }

  bool tail_consistent(double tol = 1e-12) const {
    return tail_mag >= 0.0 && std::abs(tail_pair) <= tail_mag + tol;
  }
};

using ExtendedVector = BasicExtendedVector<double>;
using ComplexExtendedVector = BasicExtendedVector<std::complex<double>>;

/// Diagonal surjective isometry x -> (a_1 x_1, a_2 x_2, ...) with |a_i| = 1.
template <class Scalar>
struct BasicDiagonalIsometry {
  std::vector<Scalar> signs;

  BasicDiagonalIsometry inverse() const {
    BasicDiagonalIsometry inv;
    inv.signs.reserve(signs.size());
    for (const Scalar& a : signs) inv.signs.push_back(conj_scalar(a));
    return inv;
  }
};

using DiagonalIsometry = BasicDiagonalIsometry<double>;
using ComplexDiagonalIsometry = BasicDiagonalIsometry<std::complex<double>>;

/// Scales (h, gamma) by 1/(||h||_1 + gamma) so the result is norm-one.
/// Rejects the zero functional. When gamma == 0 the attainment flag is
/// meaningless and is canonically set to true.
template <class Scalar>
BasicHyperplaneFunctional<Scalar> normalize(std::vector<Scalar> h, double gamma,
                                            bool attains) {
  if (gamma < 0.0) throw DomainError("normalize: negative singular weight");
  for (const Scalar& c : h) {
    if (!is_finite(c)) throw DomainError("normalize: non-finite coefficient");
  }
  if (!is_finite(gamma)) throw DomainError("normalize: non-finite weight");

  BasicHyperplaneFunctional<Scalar> f{std::move(h), gamma, attains};
  const double total = f.total_mass();
  if (total <= 0.0) throw DomainError("normalize: degenerate functional");
  for (Scalar& c : f.atomic) c /= total;
  f.singular_weight /= total;
  if (f.singular_weight == 0.0) f.singular_attains = true;
  return f;
}

/// Strips the atomic coefficients of their signs. Returns the nonnegative
/// functional together with the diagonal isometry record, whose entries
/// satisfy a_i * h_i = |h_i| (so a_i = conj(sgn(h_i)), and a_i = 1 when
/// h_i = 0).
template <class Scalar>
std::pair<BasicHyperplaneFunctional<Scalar>, BasicDiagonalIsometry<Scalar>>
sign_normalize(const BasicHyperplaneFunctional<Scalar>& f) {
  BasicHyperplaneFunctional<Scalar> out = f;
  BasicDiagonalIsometry<Scalar> iso;
  iso.signs.reserve(f.atomic.size());
  for (std::size_t i = 0; i < f.atomic.size(); ++i) {
    iso.signs.push_back(conj_scalar(sgn(f.atomic[i])));
    out.atomic[i] = Scalar(std::abs(f.atomic[i]));
  }
  return {std::move(out), std::move(iso)};
}

/// Applies the diagonal isometry coordinatewise to the prefix; the tail
/// fields are unchanged (the isometry permutes nothing and preserves all
/// coordinate moduli, so t and s survive as they are).
///
/// For real scalars, pairing the result against the sign-normalized
/// functional reproduces the original pairing. For complex scalars the
/// pairing-preserving transport uses the inverse isometry: see
/// BasicDiagonalIsometry::inverse.
template <class Scalar>
BasicExtendedVector<Scalar> conjugate_vector(
    const BasicDiagonalIsometry<Scalar>& iso,
    const BasicExtendedVector<Scalar>& y) {
  if (iso.signs.size() != y.prefix.size()) {
    throw InputError("conjugate_vector: prefix/signs length mismatch");
  }
  BasicExtendedVector<Scalar> out = y;
  for (std::size_t i = 0; i < out.prefix.size(); ++i) {
    out.prefix[i] = iso.signs[i] * out.prefix[i];
  }
  return out;
}

/// Radial clipping onto the unit ball: prefix coordinates with |y_j| > 1 are
/// replaced by sgn(y_j); everything else, including both tail fields, is kept.
/// Requires t <= 1, since a larger tail could not keep the singular pairing
/// value s after clipping.
template <class Scalar>
BasicExtendedVector<Scalar> clip_to_ball(const BasicExtendedVector<Scalar>& y) {
  if (y.tail_mag > 1.0) {
    throw DomainError("clip_to_ball: tail magnitude exceeds 1");
  }
  BasicExtendedVector<Scalar> out = y;
  for (Scalar& c : out.prefix) {
    if (std::abs(c) > 1.0) c = sgn(c);
  }
  return out;
}

}  // namespace projconst
