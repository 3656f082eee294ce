#pragma once

#include <complex>
#include <vector>

namespace hsub {

using cdouble = std::complex<double>;

/// Double factorial with the conventions 0!! = 1 and (-1)!! = 1.
double double_factorial(int k);

/// Gamma(k/2) for integer k >= 1.
double gamma_half(int k);

/// Euler Beta function for positive arguments.
double beta_fn(double x, double y);

/// Surface area of the unit sphere S^{p-1} in R^p: 2 pi^{p/2} / Gamma(p/2).
double sigma_sphere(int p);

/// Gegenbauer polynomial C_k^lambda(t) by the three-term recurrence.
double gegenbauer(int k, double lambda, double t);

/// Generalized binomial coefficient binom(alpha, k).
double binom_general(double alpha, int k);

/// closed form of int_0^inf x^k e^{alpha x} dx for Re(alpha) < 0:
/// (-1)^{k+1} k! / alpha^{k+1}.
cdouble exp_power_moment(int k, cdouble alpha);

/// Coefficients a_j of the even polynomial P_{2n-2} appearing in the
/// antiderivative of x^{2n-1} (1+x^2)^{-(2n+1)/2}:
///   a_j = -2^{n-j-1} (n-1)! / (j! (2n-2j-1)!!),  j = 0..n-1.
double radical_antiderivative_coeff(int n, int j);

/// P_{2n-2}(x) evaluated by Horner on the coefficient table.
double radical_antiderivative_poly(int n, double x);

/// Partial sum with rigorous alternating-series tail control.
struct SeriesTail {
  cdouble sum{0.0, 0.0};
  double tail_bound = 0.0;   // bound on |true value - sum|
  double last_term = 0.0;
  int terms = 0;
};

/// sum_k (-1)^k (2k+2n-1)!! / ((2k)!! (2k+2n) (2n-1)!!) x^{2k}, |x|<1.
SeriesTail odd_moment_series(int n, double x);

/// Closed form of the same series:
///   x^{-2n} ( P_{2n-2}(x) (1+x^2)^{-(2n-1)/2} + (2n-2)!!/(2n-1)!! ).
double odd_moment_closed(int n, double x);

/// Closed forms of the weighted moments
///   int_{-1}^{1} t^q (1-t^2)^{(m-3)/2} (x_0 - i r t)^{-m} dt
/// for q = 0, 1 (any m >= 2) and q = 2 (m = 2n, parameter n >= 1),
/// valid for x_0 > r > 0. The prefactor is pi for even m and 2 for odd m.
cdouble zonal_moment_closed(int q, int m_or_n, double x0, double r);

/// Coefficients b_j of the q = 2 moment:
/// b_n = 2n (2n-3)!!, b_j = (2n-2)!! (2n+1)!! / ((2j)!! (2n-2j+1)!!).
double zonal_moment2_coeff(int n, int j);

/// Partial sums of the binomial series (1-x)^{-m} and of
/// (1+x)^{-(m+1)/2} with double-factorial coefficients; used as
/// convergence oracles for the closed forms.
SeriesTail binomial_series_sum(int m, double x, int max_terms = 100000);
SeriesTail inv_sqrt_power_series_sum(int m, double x, int max_terms = 100000);

}  // namespace hsub
