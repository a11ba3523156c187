#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "projconst/functional.hpp"

namespace projconst {

/// One row of a formula-vs-solver agreement sweep.
struct SweepRow {
  std::uint64_t id = 0;
  HyperplaneFunctional functional;
  double closed_form = 0.0;
  double solver = 0.0;
  double delta = 0.0;
  bool attained = false;
};

/// Draws a normalized functional inside the closed-form hypothesis region:
/// atomic dimension uniform in {1..8}, coefficients sampled and rescaled so
/// every |h_i| < 1/2 and ||h||_1 + gamma = 1, gamma uniform in [0, 1).
/// Fully determined by the engine state.
HyperplaneFunctional random_instance(std::mt19937_64& rng);

/// Runs `count` seeded instances through mixed_lambda and the solver.
/// `threads` <= 0 picks a default; rows come back ordered by id regardless
/// of scheduling.
std::vector<SweepRow> agreement_sweep(std::uint64_t seed, std::size_t count,
                                      double tol, int threads = 0);

/// CSV with header id,m,h,gamma,closed_form,solver,delta,attained; the h
/// column joins coefficients with ';'.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Samples of the family curve for one n: `samples` evenly spaced a values
/// covering both endpoints 1/(n-1) and 1.
struct CurveSample {
  int n = 0;
  double a = 0.0;
  double value = 0.0;
};

std::vector<CurveSample> curve_sweep(int n, std::size_t samples);
std::string curve_csv(const std::vector<CurveSample>& rows);

/// Worker cap: PROJCONST_THREADS if set, otherwise hardware concurrency.
int sweep_thread_cap();

}  // namespace projconst
