#pragma once

#include <span>
#include <vector>

#include "projconst/functional.hpp"

namespace projconst {

/// Parameters of the one-parameter kernel family used by the designer:
/// atomic part family_atomic(n, a) mixed with a singular part of weight 1-b.
struct FamilyParams {
  int n = 0;     // atomic dimension, >= 2 (>= 3 for the curve formulas)
  double a = 0;  // in [1/(n-1), 1]
  double b = 0;  // atomic share, in (0, 1]
};

/// Blatter-Cheney projection constant of ker h for a purely atomic norm-one
/// functional:  1 + (sum_k |h_k| / (1 - 2|h_k|))^-1.
/// Requires h != 0, ||h||_1 = 1 (within 1e-12) and max_k |h_k| < 1/2.
double blatter_cheney(std::span<const double> h);

/// Projection constant of ker f for f = h + g with gamma = ||g||:
///   1 + (gamma + sum_i |h_i| / (1 - 2|h_i|))^-1.
/// Requires f normalized and |h_i| < 1/2 for every i. With an empty atomic
/// part this is 1 + 1/gamma = 2.
double mixed_lambda(const HyperplaneFunctional& f);

/// Atomic coefficient vector of the kernel family: length n, first entry
/// 1/(1+(n-1)a), the remaining n-1 entries a/(1+(n-1)a). Unit l1 norm.
/// Requires n >= 2 and a in [1/(n-1), 1].
std::vector<double> family_atomic(int n, double a);

/// Projection constant of the kernel of family_atomic(n, a):
///   1 + (1/((n-1)a - 1) + (n-1)a/(1+(n-3)a))^-1.
/// Continuous on [1/(n-1), 1]; the left endpoint is the extension value 1 and
/// the right endpoint equals 2 - 2/n. Requires n >= 3.
double family_curve(int n, double a);

/// Projection constant of ker f_{n,a,b} where f_{n,a,b} has atomic part
/// b * family_atomic(n, a) and singular weight 1-b. Evaluated through
/// mixed_lambda; requires b * max coefficient < 1/2.
double family_lambda(const FamilyParams& p);

/// The family member itself, with a non-attaining singular part. This is the
/// functional certified by the designer.
HyperplaneFunctional family_functional(const FamilyParams& p);

void validate_family_params(const FamilyParams& p, int min_n = 2);

}  // namespace projconst
