#pragma once

#include <vector>

namespace ontosim {

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation (modified Lentz), accurate to ~1e-14.
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with df degrees of freedom.
double student_t_cdf(double t, int df);

/// Standard Pearson correlation (covariance over the product of standard
/// deviations). Throws LengthMismatch for unequal or too-short inputs,
/// ConstantVector when either argument has zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ontosim
