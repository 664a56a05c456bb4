#pragma once

namespace quenchlab {

// Standard normal CDF, absolute error well under 1e-10 (erfc-based).
double std_normal_cdf(double x);

// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0,1].
// Continued fraction (modified Lentz), switching to the symmetric expansion
// when x > (a+1)/(a+b+2). Absolute error <= 1e-10 over the tested range.
// Throws std::domain_error for x outside [0,1] or non-positive a/b.
double regularized_incomplete_beta(double a, double b, double x);

// F-distribution CDF with d1, d2 > 0 degrees of freedom:
//   P(F <= x) = I_{d1 x / (d1 x + d2)}(d1/2, d2/2), x <= 0 maps to 0.
double f_cdf(double x, double d1, double d2);

// Upper tail P(F > x), evaluated directly via I_{d2/(d1 x + d2)}(d2/2, d1/2)
// so tiny p-values keep their precision instead of cancelling in 1 - cdf.
double f_sf(double x, double d1, double d2);

// CDF of the studentized range with k >= 2 groups and df > 0 error degrees of
// freedom; df >= 1e6 uses the known-variance (infinite-df) form. Numerical
// quadrature of the classical double integral, absolute error <= 1e-6.
double studentized_range_cdf(double q, int k, double df);

// Inverse of studentized_range_cdf in q for p in (0, 1): bracketing bisection
// to absolute tolerance 1e-6. Results are memoized (analyze hits the same
// (p, k, df) once per factor).
double studentized_range_quantile(double p, int k, double df);

}  // namespace quenchlab
