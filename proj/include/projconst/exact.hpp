#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace projconst::exact {

/// Arbitrary-precision rational scalar for the exact evaluation mode.
using Rational = boost::multiprecision::cpp_rational;

/// Exact counterparts of the closed forms, for rational coefficient data.
/// Same hypotheses as the double versions, checked exactly.
Rational blatter_cheney(const std::vector<Rational>& h);
Rational mixed_lambda(const std::vector<Rational>& h, const Rational& gamma);
std::vector<Rational> family_atomic(int n, const Rational& a);
Rational family_curve(int n, const Rational& a);
Rational family_lambda(int n, const Rational& a, const Rational& b);

/// Exact projection constant of ker(h + g) with ||g|| = gamma, for any
/// rational data with ||h||_1 + gamma = 1 (coefficients of modulus >= 1/2
/// allowed). Solves the piecewise-linear critical equation segment by
/// segment instead of bisecting.
Rational min_projection_lambda(std::vector<Rational> h, const Rational& gamma);

double to_double(const Rational& x);

}  // namespace projconst::exact
