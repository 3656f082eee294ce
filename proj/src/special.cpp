#include "hsub/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hsub {

double double_factorial(int k) {
  if (k < -1) throw std::domain_error("double_factorial: k < -1");
  double r = 1.0;
  for (int v = k; v > 1; v -= 2) r *= v;
  return r;
}

double gamma_half(int k) {
  if (k < 1) throw std::domain_error("gamma_half: k < 1");
  if (k % 2 == 0) {
    double r = 1.0;
    for (int j = 2; j < k / 2; ++j) r *= j;
    return (k == 2) ? 1.0 : r;
  }
  return std::sqrt(M_PI) * double_factorial(k - 2) / std::ldexp(1.0, (k - 1) / 2);
}

double beta_fn(double x, double y) {
  if (x <= 0.0 || y <= 0.0) throw std::domain_error("beta_fn: nonpositive argument");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double sigma_sphere(int p) {
  if (p < 1) throw std::domain_error("sigma_sphere: p < 1");
  return 2.0 * std::pow(M_PI, 0.5 * p) / gamma_half(p);
}

double gegenbauer(int k, double lambda, double t) {
  if (k < 0) throw std::domain_error("gegenbauer: negative degree");
  if (k == 0) return 1.0;
  double cm2 = 1.0;
  double cm1 = 2.0 * lambda * t;
  if (k == 1) return cm1;
  double c = cm1;
  for (int j = 2; j <= k; ++j) {
    c = (2.0 * (j + lambda - 1.0) * t * cm1 - (j + 2.0 * lambda - 2.0) * cm2) / j;
    cm2 = cm1;
    cm1 = c;
  }
  return c;
}

double binom_general(double alpha, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= (alpha - j) / (j + 1);
  return r;
}

cdouble exp_power_moment(int k, cdouble alpha) {
  if (k < 0) throw std::domain_error("exp_power_moment: negative power");
  if (alpha.real() >= 0.0) throw std::domain_error("exp_power_moment: Re(alpha) >= 0");
  double fact = 1.0;
  for (int j = 2; j <= k; ++j) fact *= j;
  cdouble denom = std::pow(alpha, k + 1);
  double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  return sign * fact / denom;
}

double radical_antiderivative_coeff(int n, int j) {
  if (n < 1 || j < 0 || j > n - 1) throw std::domain_error("radical_antiderivative_coeff: index");
  double num = std::ldexp(1.0, n - j - 1) * std::tgamma(double(n));
  double den = std::tgamma(double(j + 1)) * double_factorial(2 * n - 2 * j - 1);
  return -num / den;
}

double radical_antiderivative_poly(int n, double x) {
  double x2 = x * x;
  double r = 0.0;
  for (int j = n - 1; j >= 0; --j) r = r * x2 + radical_antiderivative_coeff(n, j);
  return r;
}

SeriesTail odd_moment_series(int n, double x) {
  if (n < 1) throw std::domain_error("odd_moment_series: n < 1");
  if (x == 0.0 || std::abs(x) >= 1.0) throw std::domain_error("odd_moment_series: need 0 < |x| < 1");
  const double x2 = x * x;
  // term_k = (-1)^k (2k+2n-1)!! / ((2k)!! (2k+2n) (2n-1)!!) x^{2k};
  // ratio of double-factorial parts gives a cheap recurrence.
  double coef = 1.0 / (2.0 * n);  // k = 0 term over (2n-1)!! cancellation
  double sum = coef;
  double sign = 1.0;
  double power = 1.0;
  double last = std::abs(coef);
  SeriesTail out;
  int k = 0;
  while (true) {
    ++k;
    // c_k / c_{k-1} = (2k+2n-1)/(2k) * (2k+2n-2)/(2k+2n)
    coef *= double(2 * k + 2 * n - 1) / double(2 * k) * double(2 * k + 2 * n - 2) / double(2 * k + 2 * n);
    sign = -sign;
    power *= x2;
    double term = coef * power;
    sum += sign * term;
    last = std::abs(term);
    if (last < 1e-16 * std::abs(sum) || k >= 10000) break;
  }
  out.sum = sum;
  out.terms = k + 1;
  out.last_term = last;
  // once |x|^2 (2k+2n+1)(2k+2n)/((2k+2)(2k+2n+2)) < 1 the terms decrease
  // and the alternating tail is bounded by the next term
  out.tail_bound = last * x2 * double(2 * k + 2 * n + 1) / double(2 * k + 2);
  return out;
}

double odd_moment_closed(int n, double x) {
  if (n < 1) throw std::domain_error("odd_moment_closed: n < 1");
  if (x == 0.0 || std::abs(x) >= 1.0) throw std::domain_error("odd_moment_closed: need 0 < |x| < 1");
  double p = radical_antiderivative_poly(n, x);
  double t = p / std::pow(1.0 + x * x, (2.0 * n - 1.0) / 2.0) +
             double_factorial(2 * n - 2) / double_factorial(2 * n - 1);
  return t / std::pow(x, 2.0 * n);
}

double zonal_moment2_coeff(int n, int j) {
  if (n < 1 || j < 0 || j > n) throw std::domain_error("zonal_moment2_coeff: index");
  if (j == n) return 2.0 * n * double_factorial(2 * n - 3);
  return double_factorial(2 * n - 2) * double_factorial(2 * n + 1) /
         (double_factorial(2 * j) * double_factorial(2 * n - 2 * j + 1));
}

cdouble zonal_moment_closed(int q, int m_or_n, double x0, double r) {
  if (!(x0 > r && r > 0.0)) throw std::domain_error("zonal_moment_closed: need x0 > r > 0");
  if (q == 0 || q == 1) {
    int m = m_or_n;
    if (m < 2) throw std::domain_error("zonal_moment_closed: m < 2");
    double kappa = (m % 2 == 0) ? M_PI : 2.0;
    double base = kappa * double_factorial(m - 3) /
                  (double_factorial(m - 2) * std::pow(x0 * x0 + r * r, (m + 1) / 2.0));
    if (q == 0) return cdouble(base * x0, 0.0);
    return cdouble(0.0, base * r);
  }
  if (q == 2) {
    int n = m_or_n;
    if (n < 1) throw std::domain_error("zonal_moment_closed: n < 1");
    double poly = 0.0;
    for (int j = 0; j <= n; ++j)
      poly += zonal_moment2_coeff(n, j) * std::pow(x0, 2 * n - 2 * j) * std::pow(r, 2 * j);
    double rn = std::pow(r, 2.0 * n);
    double val = M_PI * x0 * poly /
                     (double_factorial(2 * n - 2) * rn * std::pow(x0 * x0 + r * r, n + 0.5)) -
                 M_PI / rn;
    return cdouble(val, 0.0);
  }
  throw std::domain_error("zonal_moment_closed: q must be 0, 1 or 2");
}

SeriesTail binomial_series_sum(int m, double x, int max_terms) {
  SeriesTail out;
  double term = 1.0, sum = 0.0;
  int k = 0;
  for (; k < max_terms; ++k) {
    sum += term;
    double next = term * double(k + m) / double(k + 1) * x;
    if (std::abs(next) < 1e-16 * std::abs(sum)) { term = next; break; }
    term = next;
  }
  out.sum = sum;
  out.terms = k + 1;
  out.last_term = std::abs(term);
  // ratios (j+m)/(j+1)|x| decrease toward |x|, so the tail is dominated
  // by the geometric series with the next ratio
  double q = std::abs(x) * double(k + 1 + m) / double(k + 2);
  out.tail_bound = (q < 1.0) ? std::abs(term) / (1.0 - q) : INFINITY;
  return out;
}

SeriesTail inv_sqrt_power_series_sum(int m, double x, int max_terms) {
  SeriesTail out;
  double coef = 1.0, sum = 0.0, sign = 1.0, power = 1.0;
  int k = 0;
  for (; k < max_terms; ++k) {
    double term = coef * power;
    sum += sign * term;
    out.last_term = std::abs(term);
    coef *= double(2 * k + m + 1) / double(2 * k + 2);
    sign = -sign;
    power *= x;
    if (coef * std::abs(power) < 1e-16 * std::abs(sum)) break;
  }
  out.sum = sum;
  out.terms = k + 1;
  out.tail_bound = coef * std::abs(power);
  return out;
}

}  // namespace hsub
