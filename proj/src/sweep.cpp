#include "projconst/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "projconst/closed_form.hpp"
#include "projconst/io.hpp"
#include "projconst/numeric.hpp"
#include "projconst/solver.hpp"

namespace projconst {

HyperplaneFunctional random_instance(std::mt19937_64& rng) {
  // Margin keeps the rescaled coefficients strictly inside |h_i| < 1/2 so
  // the 1 - 2|h_i| denominators stay well conditioned.
  constexpr double kCoeffCap = 0.5 - 1e-9;
  for (;;) {
    const std::size_t m = 1 + uniform_index(rng, 8);
    const double gamma = uniform01(rng);
    std::vector<double> h(m);
    CompensatedSum norm;
    for (double& c : h) {
      c = uniform_symmetric(rng);
      norm.add(std::abs(c));
    }
    const bool attains = (rng() & 1) != 0;
    if (norm.value() < 1e-9) continue;
    const double scale = (1.0 - gamma) / norm.value();
    bool ok = true;
    for (double& c : h) {
      c *= scale;
      ok = ok && std::abs(c) < kCoeffCap;
    }
    if (!ok) continue;
    return HyperplaneFunctional{std::move(h), gamma, gamma == 0.0 || attains};
  }
}

int sweep_thread_cap() {
  if (const char* env = std::getenv("PROJCONST_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<SweepRow> agreement_sweep(std::uint64_t seed, std::size_t count,
                                      double tol, int threads) {
  std::mt19937_64 rng(seed);
  std::vector<SweepRow> rows(count);
  for (std::size_t i = 0; i < count; ++i) {
    rows[i].id = i;
    rows[i].functional = random_instance(rng);
  }

  const auto solve_row = [tol](SweepRow& row) {
    row.closed_form = mixed_lambda(row.functional);
    const SolverResult res = min_projection_norm(row.functional, tol);
    row.solver = res.lambda;
    row.delta = row.solver - row.closed_form;
    row.attained = res.attained;
  };

  int workers = threads > 0 ? threads : sweep_thread_cap();
  workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), count));
  if (workers <= 1) {
    for (SweepRow& row : rows) solve_row(row);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= rows.size()) return;
        solve_row(rows[i]);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "id,m,h,gamma,closed_form,solver,delta,attained\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.id);
    out += ",";
    out += std::to_string(row.functional.atomic.size());
    out += ",";
    for (std::size_t j = 0; j < row.functional.atomic.size(); ++j) {
      if (j) out += ";";
      out += format_double(row.functional.atomic[j]);
    }
    out += ",";
    out += format_double(row.functional.singular_weight);
    out += ",";
    out += format_double(row.closed_form);
    out += ",";
    out += format_double(row.solver);
    out += ",";
    out += format_double(row.delta);
    out += ",";
    out += row.attained ? "true" : "false";
    out += "\n";
  }
  return out;
}

std::vector<CurveSample> curve_sweep(int n, std::size_t samples) {
  if (n < 3) throw DomainError("curve_sweep: n must be >= 3");
  if (samples < 2) throw DomainError("curve_sweep: need at least 2 samples");
  const double lo = 1.0 / (n - 1);
  std::vector<CurveSample> rows;
  rows.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    // Endpoints are hit exactly: i = 0 gives a = lo, the last i gives a = 1.
    const double frac = static_cast<double>(i) / static_cast<double>(samples - 1);
    const double a = i + 1 == samples ? 1.0 : lo + frac * (1.0 - lo);
    rows.push_back({n, a, family_curve(n, a)});
  }
  return rows;
}

std::string curve_csv(const std::vector<CurveSample>& rows) {
  std::string out = "n,a,curve\n";
  for (const CurveSample& row : rows) {
    out += std::to_string(row.n);
    out += ",";
    out += format_double(row.a);
    out += ",";
    out += format_double(row.value);
    out += "\n";
  }
  return out;
}

}  // namespace projconst
