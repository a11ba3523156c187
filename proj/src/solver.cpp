#include "projconst/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "projconst/numeric.hpp"
#include "projconst/projection_norm.hpp"

namespace projconst {

namespace detail {

double coordinate_budget(double h, double tau) {
  if (h == 0.0) return 0.0;
  if (h < 0.5 && tau <= 1.0 / h - 1.0) {
    // Right endpoint of the feasible interval sits on the rising segment of
    // slope 1 - 2h before the kink at y = 1/h.
    return h * (tau - 1.0) / (1.0 - 2.0 * h);
  }
  // Past the kink the norm term grows like y - 1.
  return h * (tau + 1.0);
}

double reachable_pairing(const HyperplaneFunctional& f_abs, double tau,
                         double singular_share) {
  CompensatedSum acc;
  for (double h : f_abs.atomic) acc.add(coordinate_budget(h, tau));
  acc.add(f_abs.singular_weight * singular_share * (tau - 1.0));
  return acc.value();
}

}  // namespace detail

namespace {

constexpr int kMaxBisectionSteps = 200;
constexpr double kUnusedSlack = 1e-12;

struct BisectionOutcome {
  double lambda = 0.0;
  int iterations = 0;
};

// Smallest tau with reachable_pairing(tau) >= 1, to machine precision.
// Unrestricted instances are always feasible at tau = 2; restricted ones may
// need a larger bracket.
BisectionOutcome solve_lambda(const HyperplaneFunctional& f_abs,
                              double singular_share) {
  const auto feasible = [&](double tau) {
    return detail::reachable_pairing(f_abs, tau, singular_share) >= 1.0;
  };
  if (feasible(1.0)) return {1.0, 0};

  double lo = 1.0;
  double hi = 2.0;
  int expansions = 0;
  while (!feasible(hi)) {
    lo = hi;
    hi = 1.0 + 2.0 * (hi - 1.0);
    if (++expansions > 64) {
      throw SolverError("solve_lambda: no feasible norm level found");
    }
  }

  int iterations = 0;
  while (iterations < kMaxBisectionSteps) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  return {hi, iterations};
}

// Lexicographically smallest optimal prefix: every coordinate starts at its
// interval maximum and the pairing surplus is absorbed from the front.
std::vector<double> build_prefix(const HyperplaneFunctional& f_abs, double tau,
                                 double singular_pairing) {
  const std::size_t m = f_abs.atomic.size();
  std::vector<double> y(m, 0.0);
  CompensatedSum total;
  total.add(singular_pairing);
  for (std::size_t j = 0; j < m; ++j) {
    const double h = f_abs.atomic[j];
    if (h > 0.0) {
      y[j] = detail::coordinate_budget(h, tau) / h;
      total.add(h * y[j]);
    }
  }
  double surplus = total.value() - 1.0;
  for (std::size_t j = 0; j < m && surplus > 0.0; ++j) {
    const double h = f_abs.atomic[j];
    if (h == 0.0) continue;
    const double room = y[j] + (tau - 1.0);  // interval lower end is -(tau-1)
    const double cut = std::min(surplus / h, room);
    y[j] -= cut;
    surplus -= cut * h;
  }
  return y;
}

}  // namespace

std::string to_string(AttainmentTag tag) {
  switch (tag) {
    case AttainmentTag::FiniteDimensional: return "finite-dimensional";
    case AttainmentTag::SingularAttaining: return "singular-attaining";
    case AttainmentTag::SingularNonAttaining: return "singular-non-attaining";
    case AttainmentTag::SingularUnused: return "singular-unused";
  }
  return "unknown";
}

SolverResult min_projection_norm(const HyperplaneFunctional& f, double tol) {
  if (!(tol > 1e-14 && tol < 1e-2)) {
    throw DomainError("min_projection_norm: tol out of (1e-14, 1e-2)");
  }
  if (!f.is_normalized()) {
    throw DomainError("min_projection_norm: functional must be normalized");
  }

  auto [f_abs, iso] = sign_normalize(f);
  const auto [lambda, iterations] = solve_lambda(f_abs, 1.0);

  SolverResult result;
  result.lambda = lambda;
  result.iterations = iterations;
  result.tolerance = tol;
  result.closed_form_regime = f.atomic_sup() < 0.5;
  if (!result.closed_form_regime) {
    result.note = "outside closed-form regime, result numerical only";
  }

  const double gamma = f.singular_weight;
  const bool singular_needed = gamma > 0.0 && gamma * (lambda - 1.0) > kUnusedSlack;
  if (gamma == 0.0) {
    result.tag = AttainmentTag::FiniteDimensional;
    result.attained = true;
  } else if (!singular_needed) {
    result.tag = AttainmentTag::SingularUnused;
    result.attained = true;
    if (!result.note.empty()) result.note += "; ";
    result.note += "singular part unused at the optimum";
  } else if (f.singular_attains) {
    result.tag = AttainmentTag::SingularAttaining;
    result.attained = true;
  } else {
    result.tag = AttainmentTag::SingularNonAttaining;
    result.attained = false;
  }

  if (result.attained) {
    ExtendedVector y;
    y.tail_mag = singular_needed ? lambda - 1.0 : 0.0;
    y.tail_pair = y.tail_mag;
    y.prefix = build_prefix(f_abs, lambda, gamma * y.tail_pair);
    // Transport back through the sign isometry; real signs are involutive.
    result.minimizer = conjugate_vector(iso, y);
  }
  return result;
}

GapSequence truncation_gaps(const HyperplaneFunctional& f,
                            const std::vector<long>& levels) {
  if (!f.is_normalized()) {
    throw DomainError("truncation_gaps: functional must be normalized");
  }
  if (f.singular_weight == 0.0 || f.singular_attains) {
    throw DomainError(
        "gap sequence undefined: minimal projection may exist");
  }
  if (levels.empty()) throw DomainError("truncation_gaps: no levels given");
  long prev = 1;
  for (long m : levels) {
    if (m < 2 || m <= prev) {
      throw DomainError(
          "truncation_gaps: levels must be >= 2 and strictly increasing");
    }
    prev = m;
  }

  auto [f_abs, iso] = sign_normalize(f);
  const double lambda = solve_lambda(f_abs, 1.0).lambda;
  if (!(f.singular_weight * (lambda - 1.0) > kUnusedSlack)) {
    // Optimum reachable with s = 0: the restriction changes nothing.
    throw DomainError("gap sequence undefined: minimal projection may exist");
  }

  GapSequence seq;
  seq.levels = levels;
  seq.gaps.reserve(levels.size());
  double prev_gap = std::numeric_limits<double>::infinity();
  for (long m : levels) {
    const double share = 1.0 - 1.0 / static_cast<double>(m);
    const double restricted = solve_lambda(f_abs, share).lambda;
    const double gap = restricted - lambda;
    if (!(gap > 0.0) || gap > prev_gap) {
      throw SolverError("truncation_gaps: gap sequence not positive decreasing");
    }
    seq.gaps.push_back(gap);
    prev_gap = gap;
  }
  return seq;
}

std::pair<bool, AttainmentTag> attainment_decision(const HyperplaneFunctional& f) {
  const SolverResult r = min_projection_norm(f, 1e-9);
  return {r.attained, r.tag};
}

}  // namespace projconst
