#pragma once

#include <string>
#include <vector>

#include "projconst/closed_form.hpp"
#include "projconst/solver.hpp"

namespace projconst {

enum class CertificateKind { Mixed, PureSingular };

std::string to_string(CertificateKind kind);

/// Gap levels recomputed for every certificate; the last one carries the
/// non-attainment threshold check.
inline const std::vector<long> kCertificateGapLevels{10, 100, 1000, 10000};
inline constexpr double kCertificateGapThreshold = 1e-3;

/// A constructed functional whose kernel has projection constant `target`,
/// together with everything needed to re-check it: the family parameters,
/// the closed-form and solver values, and the truncation-gap evidence that
/// no minimal projection exists.
struct ExampleCertificate {
  double target = 0.0;
  CertificateKind kind = CertificateKind::Mixed;
  FamilyParams params;  // meaningful for kind == Mixed only
  HyperplaneFunctional functional;
  double lambda_closed_form = 0.0;
  double lambda_solver = 0.0;
  GapSequence gap_evidence;
  double tolerance = 0.0;
};

/// Constructs a certificate for target lambda in (1, 2].
///
/// lambda = 2 uses the purely singular non-attaining functional. Otherwise
/// n is the smallest dimension >= 3 with 2 - 2/n > lambda, b walks the
/// schedule 1 - 2^-k until the family brackets the target between its
/// endpoint values at a = 1/(n-1) and a = 1, and a is then located by
/// bisection to |lambda_closed_form - target| <= tol.
///
/// Requires tol in (1e-12, 1e-4).
ExampleCertificate design_for_target(double lambda, double tol);

/// Recomputes every certificate field from the stored parameters and checks
/// all invariants. The overload with `failures` reports each violated check.
bool verify_certificate(const ExampleCertificate& c);
bool verify_certificate(const ExampleCertificate& c,
                        std::vector<std::string>& failures);

}  // namespace projconst
