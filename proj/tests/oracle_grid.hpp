#pragma once

// Test-only oracle: dense grid minimization of the projection norm over the
// pairing hyperplane, independent of the solver's interval analysis.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace projconst::testing {

// Minimum over y of max_j |1 - h_j y_j| + |y_j| (1 - h_j) subject to
// sum_j h_j y_j = 1, for a purely atomic functional with 0 < h_j < 1/2,
// approximated on a grid of the given step.
//
// The largest coefficient is eliminated through the constraint. The feasible
// point y = (1, ..., 1) gives the upper bound ub = max_j 2(1 - h_j), and any
// minimizer satisfies |1 - h_j y_j| + |y_j|(1 - h_j) <= ub coordinatewise,
// which pins y_j into [-(ub - 1), (ub - 1)/(1 - 2 h_j)].
inline double grid_search_lambda(const std::vector<double>& h, double step) {
  const std::size_t m = h.size();
  double ub = 1.0;
  for (double c : h) ub = std::max(ub, std::abs(1.0 - c) + (1.0 - c));

  std::size_t elim = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (h[j] > h[elim]) elim = j;
  }
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < m; ++j) {
    if (j != elim) free_idx.push_back(j);
  }

  const auto coord_term = [&](std::size_t j, double yj) {
    return std::abs(1.0 - h[j] * yj) + std::abs(yj) * (1.0 - h[j]);
  };

  std::vector<double> y(m, 0.0);
  double best = ub;
  const auto visit = [&](const auto& self, std::size_t k, double used) -> void {
    if (k == free_idx.size()) {
      y[elim] = (1.0 - used) / h[elim];
      double v = 1.0;  // tail term with t = 0
      for (std::size_t j = 0; j < m; ++j) v = std::max(v, coord_term(j, y[j]));
      best = std::min(best, v);
      return;
    }
    const std::size_t j = free_idx[k];
    const double lo = -(ub - 1.0);
    const double hi = (ub - 1.0) / (1.0 - 2.0 * h[j]);
    const long steps = static_cast<long>(std::ceil((hi - lo) / step));
    for (long i = 0; i <= steps; ++i) {
      const double v = std::min(hi, lo + static_cast<double>(i) * step);
      y[j] = v;
      self(self, k + 1, used + h[j] * v);
    }
  };
  visit(visit, 0, 0.0);
  return best;
}

}  // namespace projconst::testing
