#include <doctest.h>

#include <cmath>

#include "projconst/designer.hpp"
#include "projconst/errors.hpp"

using namespace projconst;

TEST_CASE("design_for_target hits 1.5 with the smallest admissible dimension") {
  const ExampleCertificate c = design_for_target(1.5, 1e-9);
  CHECK(c.kind == CertificateKind::Mixed);
  CHECK(c.params.n == 5);  // 2 - 2/5 = 1.6 is the first value above 1.5
  CHECK(c.params.b < 1.0);
  CHECK(std::abs(c.lambda_closed_form - 1.5) <= 1e-9);
  CHECK(std::abs(c.lambda_solver - 1.5) <= 1e-8);
  CHECK(c.functional.singular_weight == doctest::Approx(1.0 - c.params.b));
  CHECK_FALSE(c.functional.singular_attains);
  CHECK(verify_certificate(c));
}

TEST_CASE("design_for_target picks n = 21 for 1.9") {
  const ExampleCertificate c = design_for_target(1.9, 1e-9);
  CHECK(c.params.n == 21);  // 2 - 2/21 is the first value above 1.9
  CHECK(verify_certificate(c));
}

TEST_CASE("design_for_target at 2 returns the pure singular certificate") {
  const ExampleCertificate c = design_for_target(2.0, 1e-9);
  CHECK(c.kind == CertificateKind::PureSingular);
  CHECK(c.functional.atomic.empty());
  CHECK(c.functional.singular_weight == 1.0);
  CHECK_FALSE(c.functional.singular_attains);
  CHECK(c.lambda_closed_form == 2.0);
  CHECK(c.lambda_solver == 2.0);
  CHECK(verify_certificate(c));
}

TEST_CASE("design_for_target rejects out-of-range input") {
  CHECK_THROWS_AS(design_for_target(2.5, 1e-9), DomainError);
  CHECK_THROWS_AS(design_for_target(1.0, 1e-9), DomainError);
  CHECK_THROWS_AS(design_for_target(0.5, 1e-9), DomainError);
  CHECK_THROWS_AS(design_for_target(1.5, 1e-13), DomainError);
  CHECK_THROWS_AS(design_for_target(1.5, 1e-3), DomainError);
}

TEST_CASE("produced n is minimal and the family brackets every target") {
  for (double target : {1.05, 1.3, 1.55, 1.7, 1.85}) {
    const ExampleCertificate c = design_for_target(target, 1e-9);
    const int n = c.params.n;
    CHECK(2.0 - 2.0 / n > target);
    CHECK(n >= 3);
    if (n > 3) CHECK(!(2.0 - 2.0 / (n - 1) > target));
    // Bracketing soundness at the chosen b.
    const double lo = family_lambda({n, 1.0 / (n - 1), c.params.b});
    const double hi = family_lambda({n, 1.0, c.params.b});
    CHECK(lo < target);
    CHECK(target < hi);
    CHECK(c.params.a >= 1.0 / (n - 1));
    CHECK(c.params.a <= 1.0);
  }
}

TEST_CASE("verification detects tampered certificates") {
  ExampleCertificate c = design_for_target(1.5, 1e-9);
  REQUIRE(verify_certificate(c));

  SUBCASE("mutated b breaks the closed-form recomputation") {
    c.params.b += 0.05;
    std::vector<std::string> failures;
    CHECK_FALSE(verify_certificate(c, failures));
    CHECK_FALSE(failures.empty());
  }
  SUBCASE("a zero gap invalidates the evidence") {
    c.gap_evidence.gaps.back() = 0.0;
    std::vector<std::string> failures;
    CHECK_FALSE(verify_certificate(c, failures));
    CHECK_FALSE(failures.empty());
  }
  SUBCASE("an off-target closed form is rejected") {
    c.lambda_closed_form += 5e-9;
    CHECK_FALSE(verify_certificate(c));
  }
  SUBCASE("an attaining singular part is rejected") {
    c.functional.singular_attains = true;
    CHECK_FALSE(verify_certificate(c));
  }
  SUBCASE("increasing gaps are rejected") {
    std::swap(c.gap_evidence.gaps.front(), c.gap_evidence.gaps.back());
    CHECK_FALSE(verify_certificate(c));
  }
}
