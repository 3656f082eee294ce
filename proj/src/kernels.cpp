#include "hsub/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "hsub/special.hpp"

namespace hsub {

KernelCoeffs make_kernel_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("make_kernel_coeffs: n < 1");
  KernelCoeffs k;
  k.n = n;
  for (int j = 0; j < n; ++j) k.a.push_back(radical_antiderivative_coeff(n, j));
  for (int j = 0; j <= n; ++j) k.b.push_back(zonal_moment2_coeff(n, j));
  for (int j = 0; j <= n; ++j)
    k.c.push_back((2.0 * n + 1.0) * double_factorial(2 * n) /
                  (double_factorial(2 * j) * double_factorial(2 * n - 2 * j + 1)));
  for (int j = 0; j <= n; ++j) k.d.push_back(j == n ? 2.0 : k.c[j] / n);
  k.lambda_n = M_PI * double_factorial(2 * n - 1) * double_factorial(2 * n - 3) *
               sigma_sphere(2 * n - 1);
  return k;
}

PlaneWaveParams::PlaneWaveParams(cdouble lambda_, cdouble mu_, cdouble a1, cdouble a2,
                                 HermitianVector w_)
    : lambda(lambda_), mu(mu_), alpha1(a1), alpha2(a2), w(std::move(w_)) {
  if (w.norm() == 0.0) throw std::invalid_argument("plane wave: w must be non-zero");
  if (mu == cdouble(0.0, 0.0) || lambda == cdouble(0.0, 0.0))
    throw std::invalid_argument("plane wave: lambda, mu must be non-zero");
  cdouble lhs = w.norm_sq() * alpha1 * alpha2;
  if (std::abs(lhs + lambda * mu) > 1e-12 * (1.0 + std::abs(lambda * mu)))
    throw std::invalid_argument("plane wave: |w|^2 a1 a2 = -lambda mu violated");
}

Cmv pw_bracket_left(int n_pairs, const HermitianVector& w) {
  if (w.norm() == 0.0) throw std::invalid_argument("plane wave: w = 0");
  Cmv f0 = witt_c(n_pairs, 0, false), f0d = witt_c(n_pairs, 0, true);
  Cmv wm = hermitian_vector_mv(n_pairs, w, false);
  Cmv wmd = hermitian_vector_mv(n_pairs, w, true);
  double an = w.norm();
  return f0 * f0d * (wmd * wm) * cdouble(1.0 / (an * an), 0.0) -
         f0d * wm * cdouble(1.0 / an, 0.0);
}

Cmv pw_bracket_right(int n_pairs, const HermitianVector& w) {
  if (w.norm() == 0.0) throw std::invalid_argument("plane wave: w = 0");
  Cmv f0 = witt_c(n_pairs, 0, false);
  Cmv wmd = hermitian_vector_mv(n_pairs, w, true);
  return f0 - wmd * cdouble(1.0 / w.norm(), 0.0);
}

namespace {

// y = sum_j (x_{n+j} u_j - x_j u_{n+j})
double wave_phase(const HermitianVector& w, const Eigen::VectorXd& x) {
  const int n = w.n();
  double y = 0.0;
  for (int j = 0; j < n; ++j)
    y += x(n + j) * w.w(j).real() - x(j) * w.w(j).imag();
  return y;
}

}  // namespace

FieldFn plane_wave_general(int n_pairs, const PlaneWaveParams& prm) {
  Cmv f0 = witt_c(n_pairs, 0, false), f0d = witt_c(n_pairs, 0, true);
  Cmv wm = hermitian_vector_mv(n_pairs, prm.w, false);
  Cmv wmd = hermitian_vector_mv(n_pairs, prm.w, true);
  double nsq = prm.w.norm_sq();
  Cmv bracket = f0 * f0d * (wmd * wm) * cdouble(1.0 / nsq, 0.0) -
                f0d * wm * (prm.alpha2 / prm.mu);
  FieldFn out;
  out.n = n_pairs;
  Eigen::VectorXcd wc = prm.w.w;
  cdouble a1 = prm.alpha1, a2 = prm.alpha2, la = prm.lambda, mu = prm.mu;
  out.f_full = [=](cdouble z0, const Eigen::VectorXd& x) {
    const int n = int(wc.size());
    cdouble theta(0.0, 0.0);
    for (int j = 0; j < n; ++j)
      theta += cdouble(x(j), x(n + j)) * std::conj(wc(j));
    cdouble e = std::exp(a1 * theta + a2 * std::conj(theta) + la * z0 + mu * std::conj(z0));
    return bracket * e;
  };
  return out;
}

Cmv plane_wave_P_value(int n_pairs, const HermitianVector& w, const Point& p) {
  if (w.norm() == 0.0) throw std::invalid_argument("plane_wave_P: w = 0");
  cdouble e = std::exp(cdouble(-p.x0 * w.norm(), wave_phase(w, p.x)));
  return pw_bracket_left(n_pairs, w) * pw_bracket_right(n_pairs, w) * e;
}

FieldFn plane_wave_P(int n_pairs, const HermitianVector& w) {
  Cmv bracket = pw_bracket_left(n_pairs, w) * pw_bracket_right(n_pairs, w);
  FieldFn out;
  out.n = n_pairs;
  HermitianVector wc = w;
  out.f = [=](const Point& p) {
    return bracket * std::exp(cdouble(-p.x0 * wc.norm(), wave_phase(wc, p.x)));
  };
  return out;
}

FieldFn antiholo_plane_wave(int n_pairs, const std::function<cdouble(cdouble)>& h,
                            const HermitianVector& w) {
  Cmv bracket = pw_bracket_left(n_pairs, w);
  FieldFn out;
  out.n = n_pairs;
  HermitianVector wc = w;
  out.f = [=](const Point& p) {
    cdouble zeta(p.x0 * wc.norm(), wave_phase(wc, p.x));
    return bracket * h(zeta);
  };
  return out;
}

FieldFn decaying_plane_wave(int n_pairs, const HermitianVector& w) {
  double an = w.norm();
  PlaneWaveParams prm(cdouble(0.5 * an, 0.0), cdouble(0.5 * an, 0.0), cdouble(0.5, 0.0),
                      cdouble(-0.5, 0.0), w);
  FieldFn full = plane_wave_general(n_pairs, prm);
  // the exponent is |w| x0 + i y: restrict to the y0-independent slice
  FieldFn out;
  out.n = n_pairs;
  out.f = [full](const Point& p) { return full.f_full(cdouble(p.x0, 0.0), p.x); };
  return out;
}

Cmv decaying_plane_wave_value(int n_pairs, const HermitianVector& w, const Point& p) {
  return decaying_plane_wave(n_pairs, w).f(p);
}

Cmv classical_cauchy_kernel(int n_pairs, const std::vector<int>& gens, double x0,
                            const Eigen::VectorXd& x) {
  const int m = int(gens.size());
  if (x.size() != m) throw std::invalid_argument("classical_cauchy_kernel: coordinate count");
  double rho_sq = x0 * x0 + x.squaredNorm();
  if (rho_sq == 0.0) throw std::invalid_argument("classical_cauchy_kernel: origin");
  double scale = 1.0 / (sigma_sphere(m + 1) * std::pow(rho_sq, 0.5 * (m + 1)));
  Cmv out = Cmv::scalar(n_pairs, cdouble(x0 * scale, 0.0));
  for (int k = 0; k < m; ++k)
    out.add_to(BladeMask(1) << gens[k], cdouble(-x(k) * scale, 0.0));
  out.normalize();
  return out;
}

namespace {

// shared tail sum T(s) = sum_{k>=1} binom((2n+1)/2, n+k) s^k of the
// stabilized G/H evaluation; converges for s < 1
double gh_tail_sum(int n, double s) {
  double alpha = n + 0.5;
  double bc = binom_general(alpha, n + 1);
  double sum = 0.0, pw = s;
  for (int k = 1; k <= 200; ++k) {
    double term = bc * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    bc *= (alpha - (n + k)) / double(n + k + 1);
    pw *= s;
  }
  return sum;
}

constexpr double kSeriesSwitch = 0.1;  // r/x0 below this uses the series

}  // namespace

double kernel_G_series(int n, double x0, double r) {
  if (x0 <= 0.0) throw std::domain_error("kernel_G_series: needs x0 > 0");
  double s = (r / x0) * (r / x0);
  double u = std::pow(x0, -2.0 * n) * std::pow(1.0 + s, -(n + 0.5));
  double kappa = double_factorial(2 * n) / double_factorial(2 * n - 1);
  return -kappa * u * gh_tail_sum(n, s);
}

double kernel_H_series(int n, double x0, double r) {
  if (x0 <= 0.0) throw std::domain_error("kernel_H_series: needs x0 > 0");
  double s = (r / x0) * (r / x0);
  double u = std::pow(x0, -2.0 * n) * std::pow(1.0 + s, -(n + 0.5));
  double kappa = double_factorial(2 * n) / double_factorial(2 * n - 1);
  return -(u / n) * (1.0 + kappa * gh_tail_sum(n, s));
}

double kernel_G_direct(int n, double x0, double r) {
  if (r <= 0.0) throw std::domain_error("kernel_G_direct: needs r > 0");
  KernelCoeffs kc = make_kernel_coeffs(n);
  double poly = 0.0;
  for (int j = 0; j <= n; ++j) poly += kc.c[j] * std::pow(x0, 2 * n - 2 * j) * std::pow(r, 2 * j);
  double rho = std::sqrt(x0 * x0 + r * r);
  double rn = std::pow(r, 2.0 * n);
  return x0 * poly / (rn * std::pow(rho, 2.0 * n + 1.0)) -
         double_factorial(2 * n) / (double_factorial(2 * n - 1) * rn);
}

double kernel_H_direct(int n, double x0, double r) {
  if (r <= 0.0) throw std::domain_error("kernel_H_direct: needs r > 0");
  KernelCoeffs kc = make_kernel_coeffs(n);
  double poly = 0.0;
  for (int j = 0; j <= n; ++j) poly += kc.d[j] * std::pow(x0, 2 * n - 2 * j) * std::pow(r, 2 * j);
  double rho = std::sqrt(x0 * x0 + r * r);
  double rn = std::pow(r, 2.0 * n);
  return x0 * poly / (rn * std::pow(rho, 2.0 * n + 1.0)) -
         2.0 * double_factorial(2 * n - 2) / (double_factorial(2 * n - 1) * rn);
}

double kernel_G(int n, double x0, double r) {
  if (r == 0.0) {
    if (x0 <= 0.0) throw std::domain_error("kernel_G: on the singular half-line");
    return 0.0;  // series limit
  }
  if (x0 > 0.0 && r / x0 < kSeriesSwitch) return kernel_G_series(n, x0, r);
  return kernel_G_direct(n, x0, r);
}

double kernel_H(int n, double x0, double r) {
  if (r == 0.0) {
    if (x0 <= 0.0) throw std::domain_error("kernel_H: on the singular half-line");
    return -1.0 / (n * std::pow(x0, 2.0 * n));  // series limit
  }
  if (x0 > 0.0 && r / x0 < kSeriesSwitch) return kernel_H_series(n, x0, r);
  return kernel_H_direct(n, x0, r);
}

KernelIntegrals kernel_integrals_closed(int n, const Point& p) {
  const double r = p.r();
  if (!(p.x0 > r && r > 0.0))
    throw std::domain_error("kernel_integrals_closed: needs x0 > r > 0");
  KernelCoeffs kc = make_kernel_coeffs(n);
  auto [z, zd] = hermitian_split(p);
  Cmv beta = beta_element<cdouble>(n);
  double rho = std::sqrt(p.x0 * p.x0 + r * r);
  double pw = std::pow(rho, 2.0 * n + 1.0);
  double G = kernel_G(n, p.x0, r);
  double H = kernel_H(n, p.x0, r);
  cdouble lam(kc.lambda_n, 0.0);

  KernelIntegrals out{Cmv(n), Cmv(n), Cmv(n), Cmv(n), Cmv(n), Cmv(n)};
  out.I0 = Cmv::scalar(n, lam * cdouble(p.x0 / pw, 0.0));
  out.I1 = z * (lam / pw);
  out.I2 = zd * (-lam / pw);
  Cmv zdz_g = (zd * z) * cdouble(G / (r * r), 0.0);
  out.I3 = (zdz_g - beta * cdouble(H, 0.0)) * lam;
  out.I4 = Cmv::scalar(n, lam * cdouble(p.x0 / pw, 0.0)) - (zdz_g - beta * cdouble(H, 0.0)) * lam;
  Cmv f0 = witt_c(n, 0, false), f0d = witt_c(n, 0, true);
  out.I = f0d * f0 * out.I1 - f0 * f0d * out.I2 + f0 * out.I3 + f0d * out.I4;
  return out;
}

Cmv cauchy_kernel(int n, const Point& p) {
  const double r = p.r();
  if (r == 0.0 && p.x0 <= 0.0) throw std::domain_error("cauchy_kernel: on the singular half-line");
  auto [z, zd] = hermitian_split(p);
  Cmv beta = beta_element<cdouble>(n);
  double rho = std::sqrt(p.x0 * p.x0 + r * r);
  double pw = std::pow(rho, 2.0 * n + 1.0);
  double G = kernel_G(n, p.x0, r);
  double H = kernel_H(n, p.x0, r);
  Cmv f0 = witt_c(n, 0, false), f0d = witt_c(n, 0, true);

  // beta H - (zdag z / r^2) G; on the positive axis zdag z vanishes to
  // second order while G stays finite, so the mixed term drops out
  Cmv mixed(n);
  if (r > 0.0) mixed = (zd * z) * cdouble(G / (r * r), 0.0);
  Cmv bh = beta * cdouble(H, 0.0) - mixed;

  Cmv out = zd * cdouble(-1.0 / pw, 0.0);
  out = out + f0 * bh;
  out = out + f0d * (Cmv::scalar(n, cdouble(-p.x0 / pw, 0.0)) - bh);
  out = out + f0d * f0 * ((zd - z) * cdouble(1.0 / pw, 0.0));
  return out * cdouble(1.0 / sigma_sphere(2 * n + 1), 0.0);
}

Cmv derivative_kernel(int n, const Point& p) {
  const double r = p.r();
  double rho_sq = p.x0 * p.x0 + r * r;
  if (rho_sq == 0.0) throw std::domain_error("derivative_kernel: origin");
  auto [z, zd] = hermitian_split(p);
  Cmv beta = beta_element<cdouble>(n);
  double pw1 = std::pow(rho_sq, n + 0.5);   // rho^{2n+1}
  double pw3 = std::pow(rho_sq, n + 1.5);   // rho^{2n+3}
  Cmv f0 = witt_c(n, 0, false), f0d = witt_c(n, 0, true);

  Cmv grad_pair = beta * cdouble(2.0 / pw1, 0.0) - (zd * z) * cdouble((2.0 * n + 1.0) / pw3, 0.0);
  Cmv out = zd * cdouble((2.0 * n + 1.0) * p.x0 / pw3, 0.0);
  out = out + f0 * grad_pair;
  out = out + f0d * (Cmv::scalar(n, cdouble((2.0 * n * p.x0 * p.x0 - r * r) / pw3, 0.0)) - grad_pair);
  out = out + f0d * f0 * ((z - zd) * cdouble((2.0 * n + 1.0) * p.x0 / pw3, 0.0));
  return out * cdouble(1.0 / sigma_sphere(2 * n + 1), 0.0);
}

FieldFn cauchy_kernel_field(int n) {
  FieldFn out;
  out.n = n;
  out.f = [n](const Point& p) { return cauchy_kernel(n, p); };
  return out;
}

FieldFn derivative_kernel_field(int n) {
  FieldFn out;
  out.n = n;
  out.f = [n](const Point& p) { return derivative_kernel(n, p); };
  return out;
}

}  // namespace hsub
