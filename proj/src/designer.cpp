#include "projconst/designer.hpp"

#include <cmath>

#include "projconst/errors.hpp"

namespace projconst {

namespace {

constexpr int kMaxScheduleSteps = 40;
constexpr int kMaxBisectionSteps = 200;

int smallest_admissible_n(double lambda) {
  // Smallest n >= 3 with 2 - 2/n > lambda; start from the algebraic value and
  // settle the strict inequality by scanning.
  int n = std::max(3, static_cast<int>(std::floor(2.0 / (2.0 - lambda))) - 1);
  while (!(2.0 - 2.0 / n > lambda)) ++n;
  if (n > 3 && 2.0 - 2.0 / (n - 1) > lambda) {
    throw SolverError("design_for_target: n-minimality scan failed");
  }
  return n;
}

HyperplaneFunctional pure_singular_functional() {
  HyperplaneFunctional f;
  f.singular_weight = 1.0;
  f.singular_attains = false;
  return f;
}

ExampleCertificate finish_certificate(ExampleCertificate c, double tol) {
  c.tolerance = tol;
  c.lambda_solver = min_projection_norm(c.functional, tol).lambda;
  try {
    c.gap_evidence = truncation_gaps(c.functional, kCertificateGapLevels);
  } catch (const DomainError&) {
    // Targets within ~1e-6 of 1 need a singular weight so small that the
    // gaps vanish below double resolution; refuse rather than emit a
    // certificate without usable non-attainment evidence.
    throw SolverError(
        "design_for_target: non-attainment evidence below numerical "
        "resolution for this target");
  }
  std::vector<std::string> failures;
  if (!verify_certificate(c, failures)) {
    throw SolverError("design_for_target: produced certificate fails \"" +
                      failures.front() + "\"");
  }
  return c;
}

}  // namespace

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::Mixed ? "mixed" : "pure_singular";
}

ExampleCertificate design_for_target(double lambda, double tol) {
  if (!(lambda > 1.0 && lambda <= 2.0)) {
    throw DomainError("design_for_target: target out of (1, 2]");
  }
  if (!(tol > 1e-12 && tol < 1e-4)) {
    throw DomainError("design_for_target: tol out of (1e-12, 1e-4)");
  }

  ExampleCertificate c;
  c.target = lambda;

  if (lambda == 2.0) {
    c.kind = CertificateKind::PureSingular;
    c.functional = pure_singular_functional();
    c.lambda_closed_form = mixed_lambda(c.functional);
    return finish_certificate(std::move(c), tol);
  }

  c.kind = CertificateKind::Mixed;
  const int n = smallest_admissible_n(lambda);
  const double a_lo = 1.0 / (n - 1);

  double b = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
  bool bracketed = false;
  for (int k = 1; k <= kMaxScheduleSteps; ++k) {
    b = 1.0 - std::ldexp(1.0, -k);
    f_lo = family_lambda({n, a_lo, b});
    f_hi = family_lambda({n, 1.0, b});
    if (f_lo < lambda && lambda < f_hi) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    throw SolverError("design_for_target: schedule failed to bracket target");
  }

  double lo = a_lo;
  double hi = 1.0;
  double a = lo;
  double value = f_lo;
  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = family_lambda({n, mid, b});
    if (v < lambda) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (std::abs(v - lambda) < std::abs(value - lambda)) {
      a = mid;
      value = v;
    }
  }
  if (!(std::abs(value - lambda) <= tol)) {
    throw SolverError("design_for_target: bisection missed the target");
  }

  c.params = {n, a, b};
  c.functional = family_functional(c.params);
  c.lambda_closed_form = value;
  return finish_certificate(std::move(c), tol);
}

bool verify_certificate(const ExampleCertificate& c) {
  std::vector<std::string> failures;
  return verify_certificate(c, failures);
}

bool verify_certificate(const ExampleCertificate& c,
                        std::vector<std::string>& failures) {
  failures.clear();
  const auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    return ok;
  };

  check(c.target > 1.0 && c.target <= 2.0, "target out of (1, 2]");
  check(c.tolerance > 1e-12 && c.tolerance < 1e-4, "tolerance out of range");
  if (!failures.empty()) return false;

  double closed_form = 0.0;
  bool structure_ok = false;
  if (c.kind == CertificateKind::PureSingular) {
    structure_ok =
        check(c.functional.atomic.empty() && c.functional.singular_weight == 1.0 &&
                  !c.functional.singular_attains,
              "functional is not the purely singular non-attaining one");
    if (structure_ok) closed_form = mixed_lambda(c.functional);
  } else {
    try {
      validate_family_params(c.params, 3);
      check(c.params.b < 1.0, "mixed certificate requires b < 1");
      const HyperplaneFunctional expected = family_functional(c.params);
      bool match = c.functional.atomic.size() == expected.atomic.size() &&
                   c.functional.singular_weight == expected.singular_weight &&
                   !c.functional.singular_attains;
      for (std::size_t j = 0; match && j < expected.atomic.size(); ++j) {
        match = std::abs(c.functional.atomic[j] - expected.atomic[j]) <= 1e-15;
      }
      structure_ok =
          check(match, "functional does not match the stored (n, a, b)");
      if (structure_ok) closed_form = family_lambda(c.params);
    } catch (const DomainError& e) {
      check(false, std::string("invalid family parameters: ") + e.what());
    }
  }
  if (!failures.empty()) return false;

  check(std::abs(closed_form - c.lambda_closed_form) <= 1e-12,
        "stored closed form does not match recomputation");
  check(std::abs(c.lambda_closed_form - c.target) <= c.tolerance,
        "closed form misses the target beyond tolerance");

  try {
    const SolverResult solved = min_projection_norm(c.functional, c.tolerance);
    check(std::abs(solved.lambda - closed_form) <= 10.0 * c.tolerance,
          "solver disagrees with the closed form");
    check(std::abs(solved.lambda - c.lambda_solver) <= 10.0 * c.tolerance,
          "stored solver value does not match recomputation");
    check(!solved.attained, "solver reports an attained minimum");
  } catch (const std::exception& e) {
    check(false, std::string("solver failed: ") + e.what());
  }

  const GapSequence& g = c.gap_evidence;
  if (check(!g.levels.empty() && g.levels.size() == g.gaps.size(),
            "gap evidence empty or malformed")) {
    bool positive = true;
    bool monotone = true;
    for (std::size_t i = 0; i < g.gaps.size(); ++i) {
      positive = positive && g.gaps[i] > 0.0;
      monotone = monotone && (i == 0 || g.gaps[i] <= g.gaps[i - 1]);
    }
    check(positive, "gap evidence contains a non-positive entry");
    check(monotone, "gap evidence is not nonincreasing");
    check(g.gaps.back() <= kCertificateGapThreshold,
          "last gap exceeds the non-attainment threshold");
    try {
      const GapSequence fresh = truncation_gaps(c.functional, g.levels);
      bool agree = true;
      for (std::size_t i = 0; i < fresh.gaps.size(); ++i) {
        agree = agree && std::abs(fresh.gaps[i] - g.gaps[i]) <= 1e-10;
      }
      check(agree, "stored gaps do not match recomputation");
    } catch (const std::exception& e) {
      check(false, std::string("gap recomputation failed: ") + e.what());
    }
  }

  return failures.empty();
}

}  // namespace projconst
