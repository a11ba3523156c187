#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "projconst/closed_form.hpp"
#include "projconst/errors.hpp"

using namespace projconst;

namespace {

std::vector<double> uniform_coeffs(int n) {
  return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n);
}

}  // namespace

TEST_CASE("blatter_cheney on symmetric kernels gives 2 - 2/n") {
  CHECK(blatter_cheney(uniform_coeffs(4)) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(blatter_cheney(uniform_coeffs(3)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (int n = 3; n <= 50; ++n) {
    CHECK(std::abs(blatter_cheney(uniform_coeffs(n)) - (2.0 - 2.0 / n)) <=
          1e-12);
  }
}

TEST_CASE("blatter_cheney on an asymmetric example") {
  // 1 + (0.4/0.2 + 0.3/0.4 + 0.3/0.4)^-1 = 1 + 2/7
  const double value = blatter_cheney(std::vector<double>{0.4, 0.3, 0.3});
  CHECK(value == doctest::Approx(1.0 + 2.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("blatter_cheney rejects hypothesis violations") {
  CHECK_THROWS_AS(blatter_cheney(std::vector<double>{0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(blatter_cheney(std::vector<double>{0.6, 0.4}), DomainError);
  CHECK_THROWS_AS(blatter_cheney(std::vector<double>{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(blatter_cheney(std::vector<double>{0.3, 0.3}), DomainError);
}

TEST_CASE("mixed_lambda covers the pure singular and pure atomic poles") {
  HyperplaneFunctional singular;
  singular.singular_weight = 1.0;
  singular.singular_attains = false;
  CHECK(mixed_lambda(singular) == 2.0);

  const HyperplaneFunctional atomic{uniform_coeffs(4), 0.0, true};
  CHECK(mixed_lambda(atomic) == blatter_cheney(atomic.atomic));
}

TEST_CASE("mixed_lambda on a mixed functional") {
  const HyperplaneFunctional f{{0.25, 0.25}, 0.5, false};
  CHECK(mixed_lambda(f) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("mixed_lambda validates its input") {
  CHECK_THROWS_AS(mixed_lambda({{0.5, 0.25}, 0.25, true}), DomainError);
  CHECK_THROWS_AS(mixed_lambda({{0.25}, 0.25, true}), DomainError);
}

TEST_CASE("family_atomic produces the expected coefficient vectors") {
  CHECK(family_atomic(4, 1.0) == std::vector<double>{0.25, 0.25, 0.25, 0.25});

  const std::vector<double> at_endpoint = family_atomic(4, 1.0 / 3.0);
  CHECK(at_endpoint[0] == doctest::Approx(0.5).epsilon(1e-14));
  for (int j = 1; j < 4; ++j) {
    CHECK(at_endpoint[j] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  }

  CHECK(family_atomic(4, 0.5) == std::vector<double>{0.4, 0.2, 0.2, 0.2});

  CHECK_THROWS_AS(family_atomic(4, 0.2), DomainError);
  CHECK_THROWS_AS(family_atomic(4, 1.1), DomainError);
  CHECK_THROWS_AS(family_atomic(1, 1.0), DomainError);
}

TEST_CASE("family_atomic has unit l1 norm") {
  for (int n = 2; n <= 12; ++n) {
    for (double a : {1.0 / (n - 1), 0.5 / (n - 1) + 0.5, 1.0}) {
      const HyperplaneFunctional f{family_atomic(n, a), 0.0, true};
      CHECK(std::abs(f.atomic_norm() - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("family_curve endpoints are exact") {
  for (int n = 3; n <= 10; ++n) {
    CHECK(family_curve(n, 1.0) == 2.0 - 2.0 / n);
    CHECK(family_curve(n, 1.0 / (n - 1)) == 1.0);
  }
}

TEST_CASE("family_curve at an interior point") {
  // 1 + (1/0.5 + 1.5/1.5)^-1 = 4/3
  CHECK(family_curve(4, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(family_curve(2, 1.0), DomainError);
  CHECK_THROWS_AS(family_curve(4, 0.1), DomainError);
}

TEST_CASE("family_curve matches blatter_cheney of the family coefficients") {
  for (int n = 3; n <= 10; ++n) {
    const double lo = 1.0 / (n - 1);
    for (int i = 1; i <= 50; ++i) {
      // Strictly interior: i/51 keeps a below 1 even after rounding.
      const double a = lo + (1.0 - lo) * i / 51.0;
      const double via_curve = family_curve(n, a);
      const double via_bc = blatter_cheney(family_atomic(n, a));
      CHECK(std::abs(via_curve - via_bc) <= 1e-12);
    }
  }
}

TEST_CASE("family_curve is continuous at the left endpoint") {
  for (int n : {3, 4, 7}) {
    const double lo = 1.0 / (n - 1);
    double prev = std::numeric_limits<double>::infinity();
    for (double eps = 1e-2; eps >= 1e-10; eps /= 10.0) {
      const double gap = std::abs(family_curve(n, lo + eps) - 1.0);
      CHECK(gap <= prev);
      prev = gap;
    }
    CHECK(prev <= 1e-8);
  }
}

TEST_CASE("family_lambda reduces to the curve at b = 1") {
  CHECK(family_lambda({4, 1.0, 1.0}) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(family_lambda({4, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(family_lambda({4, 1.0, 1.5}), DomainError);
}

TEST_CASE("family_lambda interpolates toward the singular pole") {
  // n = 5, a = 1, b = 0.9: 1 + (0.1 + 0.9/(1 - 0.36))^-1
  const double expected = 1.0 + 1.0 / (0.1 + 0.9 / (1.0 - 0.36));
  CHECK(family_lambda({5, 1.0, 0.9}) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("family_lambda guards the coefficient cap") {
  // b = 1 at the left endpoint puts the lead coefficient at exactly 1/2.
  CHECK_THROWS_AS(family_lambda({3, 0.5, 1.0}), DomainError);
  CHECK_NOTHROW(family_lambda({3, 0.5, 0.999}));
}
