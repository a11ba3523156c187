#include "projconst/exact.hpp"

#include <algorithm>

#include "projconst/errors.hpp"

namespace projconst::exact {

namespace {

Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

void check_unit_mass(const std::vector<Rational>& h, const Rational& gamma) {
  Rational total = gamma;
  for (const Rational& c : h) total += rational_abs(c);
  if (total != 1) {
    throw DomainError("exact: coefficients and weight must sum to 1");
  }
}

Rational reciprocal_sum(const std::vector<Rational>& h) {
  const Rational half(1, 2);
  Rational sum = 0;
  for (const Rational& c : h) {
    const Rational m = rational_abs(c);
    if (m >= half) {
      throw DomainError("exact: coefficient modulus >= 1/2");
    }
    sum += m / (1 - 2 * m);
  }
  return sum;
}

}  // namespace

double to_double(const Rational& x) { return static_cast<double>(x); }

Rational blatter_cheney(const std::vector<Rational>& h) {
  if (h.empty() || std::all_of(h.begin(), h.end(),
                               [](const Rational& c) { return c == 0; })) {
    throw DomainError("exact blatter_cheney: zero functional");
  }
  check_unit_mass(h, 0);
  return 1 + 1 / reciprocal_sum(h);
}

Rational mixed_lambda(const std::vector<Rational>& h, const Rational& gamma) {
  if (gamma < 0) throw DomainError("exact mixed_lambda: negative weight");
  check_unit_mass(h, gamma);
  const Rational total = gamma + reciprocal_sum(h);
  if (total == 0) throw DomainError("exact mixed_lambda: degenerate functional");
  return 1 + 1 / total;
}

std::vector<Rational> family_atomic(int n, const Rational& a) {
  if (n < 2) throw DomainError("exact family: n out of range");
  if (a < Rational(1, n - 1) || a > 1) {
    throw DomainError("exact family: a out of range");
  }
  const Rational denom = 1 + (n - 1) * a;
  std::vector<Rational> h(static_cast<std::size_t>(n), a / denom);
  h[0] = 1 / denom;
  return h;
}

Rational family_curve(int n, const Rational& a) {
  if (n < 3) throw DomainError("exact family: n out of range");
  if (a < Rational(1, n - 1) || a > 1) {
    throw DomainError("exact family: a out of range");
  }
  if (a == Rational(1, n - 1)) return 1;
  const Rational term1 = 1 / ((n - 1) * a - 1);
  const Rational term2 = (n - 1) * a / (1 + (n - 3) * a);
  return 1 + 1 / (term1 + term2);
}

Rational family_lambda(int n, const Rational& a, const Rational& b) {
  if (!(b > 0 && b <= 1)) throw DomainError("exact family: b out of range");
  std::vector<Rational> h = family_atomic(n, a);
  for (Rational& c : h) c *= b;
  return mixed_lambda(h, 1 - b);
}

Rational min_projection_lambda(std::vector<Rational> h, const Rational& gamma) {
  if (gamma < 0) throw DomainError("exact solver: negative weight");
  check_unit_mass(h, gamma);
  for (Rational& c : h) c = rational_abs(c);

  const Rational half(1, 2);
  // Reachable pairing at level tau, as in the double solver: interval maxima
  // of h*y under the per-coordinate norm bound, plus gamma*(tau-1).
  const auto reachable = [&](const Rational& tau) {
    Rational total = gamma * (tau - 1);
    for (const Rational& c : h) {
      if (c == 0) continue;
      if (c < half && tau <= 1 / c - 1) {
        total += c * (tau - 1) / (1 - 2 * c);
      } else {
        total += c * (tau + 1);
      }
    }
    return total;
  };

  if (reachable(1) >= 1) return 1;

  // Breakpoints where a coordinate's budget leaves the pre-kink segment.
  std::vector<Rational> knots;
  for (const Rational& c : h) {
    if (c > 0 && c < half) knots.push_back(1 / c - 1);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  Rational lo = 1;
  for (const Rational& knot : knots) {
    if (knot <= 1) continue;
    if (reachable(knot) >= 1) {
      // Crossing lies in (lo, knot]; the segment is linear in tau.
      const Rational f_lo = reachable(lo);
      const Rational f_hi = reachable(knot);
      return lo + (1 - f_lo) * (knot - lo) / (f_hi - f_lo);
    }
    lo = knot;
  }

  // Final unbounded segment: every coordinate is past its kink, so each
  // budget grows affinely with slope equal to its coefficient.
  Rational slope = gamma;
  Rational at_lo = reachable(lo);
  for (const Rational& c : h) slope += c;
  if (slope == 0) throw DomainError("exact solver: degenerate functional");
  return lo + (1 - at_lo) / slope;
}

}  // namespace projconst::exact
