#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projconst/functional.hpp"

namespace projconst {

enum class AttainmentTag {
  FiniteDimensional,    // gamma = 0: the minimum exists by compactness
  SingularAttaining,    // optimum needs |s| = t and the singular part attains
  SingularNonAttaining, // optimum needs s != 0 but |s| = t is unreachable
  SingularUnused,       // optimum reachable with s = 0
};

std::string to_string(AttainmentTag tag);

/// Result of minimizing operator_norm(f, y) over all y with <f, y> = 1 and
/// |s| <= t.
struct SolverResult {
  double lambda = 0.0;
  bool attained = false;
  std::optional<ExtendedVector> minimizer;  // present iff attained
  int iterations = 0;
  double tolerance = 0.0;
  AttainmentTag tag = AttainmentTag::FiniteDimensional;
  bool closed_form_regime = false;  // all |h_i| < 1/2
  std::string note;                 // set when outside the closed-form regime
};

/// Minima of the level-m restricted problems (|s| <= (1 - 1/m) t) against the
/// true infimum. Strictly positive, nonincreasing gaps witness that no
/// minimal projection exists.
struct GapSequence {
  std::vector<long> levels;
  std::vector<double> gaps;
};

/// Projection constant of ker f, computed by bisection on the candidate norm
/// tau over [1, 2].
///
/// For fixed tau the feasible y_j for coordinate j form an interval (the
/// per-coordinate norm term is piecewise-linear convex in y_j), so the
/// largest reachable pairing is the sum of per-coordinate interval maxima of
/// h_j y_j plus gamma (tau - 1) from the singular part; tau is feasible iff
/// that total reaches 1. The indicator is monotone in tau and the bisection
/// is run to machine precision.
///
/// Requires f normalized, real scalars, tol in (1e-14, 1e-2).
SolverResult min_projection_norm(const HyperplaneFunctional& f, double tol);

/// Gap evidence for non-attainment: for each level m solves the closed
/// restriction |s| <= (1 - 1/m) t and reports delta_m = lambda_m - lambda.
/// Requires gamma > 0, a non-attaining singular part, and an optimum that
/// actually uses it; levels must be >= 2 and strictly increasing.
GapSequence truncation_gaps(const HyperplaneFunctional& f,
                            const std::vector<long>& levels);

/// Whether a minimal projection onto ker f exists, with the reason.
std::pair<bool, AttainmentTag> attainment_decision(const HyperplaneFunctional& f);

namespace detail {
/// Largest h * y subject to |1 - h y| + |y| (1 - h) <= tau, for h >= 0,
/// tau >= 1. Exposed for the bisection-monotonicity property tests.
double coordinate_budget(double h, double tau);

/// Total reachable pairing at level tau: atomic interval maxima plus
/// singular_share * gamma * (tau - 1).
double reachable_pairing(const HyperplaneFunctional& f_abs, double tau,
                         double singular_share);
}  // namespace detail

}  // namespace projconst
