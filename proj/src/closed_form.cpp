#include "projconst/closed_form.hpp"

#include <cmath>
#include <cstddef>

#include "projconst/errors.hpp"
#include "projconst/numeric.hpp"

namespace projconst {

namespace {

constexpr double kNormTol = 1e-12;

// sum_k |h_k| / (1 - 2|h_k|), rejecting any |h_k| >= 1/2.
double reciprocal_sum(std::span<const double> h) {
  CompensatedSum acc;
  for (double c : h) {
    const double m = std::abs(c);
    if (m >= 0.5) {
      throw DomainError(
          "closed form: coefficient modulus >= 1/2 violates the hypothesis");
    }
    acc.add(m / (1.0 - 2.0 * m));
  }
  return acc.value();
}

}  // namespace

double blatter_cheney(std::span<const double> h) {
  if (h.empty()) throw DomainError("blatter_cheney: empty coefficient vector");
  CompensatedSum norm;
  bool nonzero = false;
  for (double c : h) {
    norm.add(std::abs(c));
    nonzero = nonzero || c != 0.0;
  }
  if (!nonzero) throw DomainError("blatter_cheney: zero functional");
  if (std::abs(norm.value() - 1.0) > kNormTol) {
    throw DomainError("blatter_cheney: coefficients must have unit l1 norm");
  }
  return 1.0 + 1.0 / reciprocal_sum(h);
}

double mixed_lambda(const HyperplaneFunctional& f) {
  if (!f.is_normalized(kNormTol)) {
    throw DomainError("mixed_lambda: functional must be normalized");
  }
  CompensatedSum total;
  total.add(f.singular_weight);
  for (double c : f.atomic) {
    const double m = std::abs(c);
    if (m >= 0.5) {
      throw DomainError(
          "mixed_lambda: coefficient modulus >= 1/2 violates the hypothesis");
    }
    total.add(m / (1.0 - 2.0 * m));
  }
  const double t = total.value();
  if (t <= 0.0) throw DomainError("mixed_lambda: degenerate functional");
  return 1.0 + 1.0 / t;
}

void validate_family_params(const FamilyParams& p, int min_n) {
  if (p.n < min_n) throw DomainError("family: n out of range");
  const double lo = 1.0 / (p.n - 1);
  if (!(p.a >= lo && p.a <= 1.0)) throw DomainError("family: a out of range");
  if (!(p.b > 0.0 && p.b <= 1.0)) throw DomainError("family: b out of range");
}

std::vector<double> family_atomic(int n, double a) {
  validate_family_params({n, a, 1.0}, 2);
  const double denom = 1.0 + (n - 1) * a;
  std::vector<double> h(static_cast<std::size_t>(n), a / denom);
  h[0] = 1.0 / denom;
  return h;
}

double family_curve(int n, double a) {
  validate_family_params({n, a, 1.0}, 3);
  if (a == 1.0) return 2.0 - 2.0 / n;
  // The first term's denominator (n-1)a - 1 vanishes at the left endpoint;
  // the curve extends continuously by the value 1 there.
  if (a <= 1.0 / (n - 1)) return 1.0;
  const double d = std::fma(static_cast<double>(n - 1), a, -1.0);
  if (d <= 0.0) return 1.0;
  const double term1 = 1.0 / d;
  const double term2 = (n - 1) * a / (1.0 + (n - 3) * a);
  return 1.0 + 1.0 / (term1 + term2);
}

HyperplaneFunctional family_functional(const FamilyParams& p) {
  validate_family_params(p, 3);
  HyperplaneFunctional f;
  f.atomic = family_atomic(p.n, p.a);
  for (double& c : f.atomic) c *= p.b;
  f.singular_weight = 1.0 - p.b;
  f.singular_attains = f.singular_weight == 0.0;
  return f;
}

double family_lambda(const FamilyParams& p) {
  const HyperplaneFunctional f = family_functional(p);
  if (f.atomic_sup() >= 0.5) {
    throw DomainError("family_lambda: b * max coefficient >= 1/2");
  }
  return mixed_lambda(f);
}

}  // namespace projconst
