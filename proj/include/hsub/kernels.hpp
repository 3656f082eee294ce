#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hsub/clifford.hpp"
#include "hsub/fd.hpp"
#include "hsub/witt.hpp"

namespace hsub {

/// Coefficient tables for fixed n: the antiderivative coefficients a_j,
/// the second-moment coefficients b_j, the kernel coefficients c_j, d_j,
/// and the normalization lambda_n of the plane-wave integral.
struct KernelCoeffs {
  int n = 1;
  std::vector<double> a;  // size n
  std::vector<double> b;  // size n+1
  std::vector<double> c;  // size n+1
  std::vector<double> d;  // size n+1
  double lambda_n = 0.0;
};

KernelCoeffs make_kernel_coeffs(int n);

/// Parameters of the exponential plane-wave family; construction
/// enforces |w|^2 alpha1 alpha2 = -lambda mu.
struct PlaneWaveParams {
  cdouble lambda, mu, alpha1, alpha2;
  HermitianVector w;

  PlaneWaveParams(cdouble lambda_, cdouble mu_, cdouble a1, cdouble a2, HermitianVector w_);
};

/// The idempotent bracket f0 f0^dag wdag w/|w|^2 - f0^dag w/|w| and the
/// right factor f0 - wdag/|w| of the two-sided plane wave.
Cmv pw_bracket_left(int n_pairs, const HermitianVector& w);
Cmv pw_bracket_right(int n_pairs, const HermitianVector& w);

/// General left solution exp(a1 th + a2 conj(th) + lambda z0 + mu zbar0)
/// (f0 f0^dag wdag w/|w|^2 - (a2/mu) f0^dag w); full (z0-dependent) field.
FieldFn plane_wave_general(int n_pairs, const PlaneWaveParams& prm);

/// Two-sided plane wave P; y0-independent.
FieldFn plane_wave_P(int n_pairs, const HermitianVector& w);
Cmv plane_wave_P_value(int n_pairs, const HermitianVector& w, const Point& p);

/// h(x + i y) (f0 f0^dag wdag w/|w|^2 - f0^dag w/|w|) with
/// x = x0 |w|, y = sum (x_{n+j} u_j - x_j u_{n+j}); h anti-holomorphic.
FieldFn antiholo_plane_wave(int n_pairs, const std::function<cdouble(cdouble)>& h,
                            const HermitianVector& w);

/// The decaying member of the general family (lambda = mu = |w|/2,
/// a1 = 1/2, a2 = -1/2): left solution, y0-independent, -> 0 as x0 -> -inf.
FieldFn decaying_plane_wave(int n_pairs, const HermitianVector& w);
Cmv decaying_plane_wave_value(int n_pairs, const HermitianVector& w, const Point& p);

/// Classical kernel (x0 - x) / (sigma_{m+1} |x0 + x|^{m+1}) over the
/// generator set gens inside the algebra with n_pairs pairs; x has one
/// coordinate per generator.
Cmv classical_cauchy_kernel(int n_pairs, const std::vector<int>& gens, double x0,
                            const Eigen::VectorXd& x);

/// G and H of the kernel construction. For x0 > 0 and r/x0 below 0.1
/// the cancellation-prone closed forms are replaced by the power series
/// in (r/x0)^2; r = 0 returns the series limit.
double kernel_G(int n, double x0, double r);
double kernel_H(int n, double x0, double r);
double kernel_G_direct(int n, double x0, double r);
double kernel_H_direct(int n, double x0, double r);
double kernel_G_series(int n, double x0, double r);
double kernel_H_series(int n, double x0, double r);

/// Closed forms of the five plane-wave moments and their recombination.
struct KernelIntegrals {
  Cmv I0, I1, I2, I3, I4, I;
};
KernelIntegrals kernel_integrals_closed(int n, const Point& p);

/// The Cauchy kernel E; defined off the half-line {x0 <= 0, x = 0},
/// with the removable r -> 0 limit taken for x0 > 0.
Cmv cauchy_kernel(int n, const Point& p);

/// K = d/dx0 E, singular only at the origin.
Cmv derivative_kernel(int n, const Point& p);

FieldFn cauchy_kernel_field(int n);
FieldFn derivative_kernel_field(int n);

}  // namespace hsub
