#include <cmath>

#include "doctest.h"
#include "hsub/kernels.hpp"
#include "hsub/quadrature.hpp"
#include "hsub/special.hpp"

using namespace hsub;

namespace {

Point mk_point(double x0, std::initializer_list<double> xs) {
  Eigen::VectorXd x(int(xs.size()));
  int i = 0;
  for (double v : xs) x(i++) = v;
  return Point(x0, x);
}

}  // namespace

TEST_CASE("coefficient tables at n = 1 and n = 2") {
  KernelCoeffs k1 = make_kernel_coeffs(1);
  CHECK(k1.c[0] == doctest::Approx(2.0));
  CHECK(k1.c[1] == doctest::Approx(3.0));
  CHECK(k1.d[0] == doctest::Approx(2.0));
  CHECK(k1.d[1] == doctest::Approx(2.0));
  CHECK(k1.b[1] == doctest::Approx(2.0));  // 2n (2n-3)!! at n = 1
  CHECK(k1.lambda_n == doctest::Approx(2.0 * M_PI).epsilon(1e-14));

  KernelCoeffs k2 = make_kernel_coeffs(2);
  // c_j = (2n+1)(2n)!! / ((2j)!! (2n-2j+1)!!)
  CHECK(k2.c[0] == doctest::Approx(5.0 * 8.0 / 15.0));
  CHECK(k2.c[1] == doctest::Approx(5.0 * 8.0 / (2.0 * 3.0)));
  CHECK(k2.c[2] == doctest::Approx(5.0));
  CHECK(k2.d[2] == doctest::Approx(2.0));
  CHECK(k2.d[0] == doctest::Approx(k2.c[0] / 2.0));
  CHECK(k2.lambda_n == doctest::Approx(M_PI * 3.0 * 1.0 * 4.0 * M_PI).epsilon(1e-14));
}

TEST_CASE("G and H: n = 1 closed forms and limits") {
  double x0 = 1.1, r = 0.8;
  double h_want = (2.0 / (r * r)) * (x0 / std::sqrt(x0 * x0 + r * r) - 1.0);
  CHECK(kernel_H(1, x0, r) == doctest::Approx(h_want).epsilon(1e-13));
  CHECK(kernel_G(1, x0, r) ==
        doctest::Approx(h_want + x0 / std::pow(x0 * x0 + r * r, 1.5)).epsilon(1e-12));
  CHECK(kernel_H(1, 1.3, 0.0) == doctest::Approx(-1.0 / 1.69).epsilon(1e-14));
  CHECK(kernel_G(1, 1.3, 0.0) == 0.0);
  CHECK_THROWS_AS(kernel_G(1, -0.5, 0.0), std::domain_error);
}

TEST_CASE("G and H: series matches direct evaluation across the switch") {
  for (int n : {1, 2})
    for (double ratio : {0.06, 0.1, 0.18})
      for (double x0 : {0.9, 1.7}) {
        double r = ratio * x0;
        double scale =
            double_factorial(2 * n) / (double_factorial(2 * n - 1) * std::pow(r, 2.0 * n));
        CHECK(std::abs(kernel_G_series(n, x0, r) - kernel_G_direct(n, x0, r)) <= 1e-12 * scale);
        CHECK(std::abs(kernel_H_series(n, x0, r) - kernel_H_direct(n, x0, r)) <= 1e-12 * scale);
      }
}

TEST_CASE("derivative relations of G and H") {
  const double h = 1e-4;
  for (int n : {1, 2}) {
    double x0 = 0.9, r = 0.75;
    double dg = (kernel_G_direct(n, x0 + h, r) - kernel_G_direct(n, x0 - h, r)) / (2 * h);
    double dh = (kernel_H_direct(n, x0 + h, r) - kernel_H_direct(n, x0 - h, r)) / (2 * h);
    double rho_sq = x0 * x0 + r * r;
    CHECK(dg == doctest::Approx((2 * n + 1) * r * r / std::pow(rho_sq, n + 1.5)).epsilon(1e-6));
    CHECK(dh == doctest::Approx(2.0 / std::pow(rho_sq, n + 0.5)).epsilon(1e-6));
  }
}

TEST_CASE("plane wave parameter constraint") {
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.0, 1.0)).finished()};
  CHECK_THROWS_AS(PlaneWaveParams({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, w),
                  std::invalid_argument);
  // valid: |w|^2 a1 a2 = -lambda mu with |w|^2 = 2
  PlaneWaveParams ok({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-0.5, 0.0}, w);
  CHECK(ok.w.norm() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("two-sided plane wave is annihilated from both sides") {
  HermitianVector w{(Eigen::VectorXcd(2) << cdouble(0.8, -0.5), cdouble(0.2, 1.1)).finished()};
  FieldFn f = plane_wave_P(2, w);
  FDConfig cfg;
  Point p = mk_point(0.3, {0.2, -0.4, 0.1, 0.5});
  CHECK(apply_D_left(f, p, cfg).norm() <= 1e-8);
  CHECK(apply_D_right(f, p, cfg).norm() <= 1e-8);
}

TEST_CASE("decaying plane wave solves the system and decays") {
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.0, 0.7)).finished()};
  FieldFn f = decaying_plane_wave(1, w);
  FDConfig cfg;
  Point p = mk_point(-0.4, {0.6, -0.1});
  CHECK(apply_D_left(f, p, cfg).norm() <= 1e-8);
  Point lo = mk_point(-8.0, {0.6, -0.1});
  CHECK(f.f(lo).norm() <= f.f(p).norm() * std::exp((-8.0 + 0.4) * w.norm()) * 1.0001);
}

TEST_CASE("classical kernel: values, scaling, monogenicity") {
  std::vector<int> gens{1, 2};
  Eigen::VectorXd x(2);
  x << 0.3, -0.4;
  Cmv e = classical_cauchy_kernel(1, gens, 0.8, x);
  double rho = std::sqrt(0.64 + 0.25);
  CHECK(e.coeff(0).real() == doctest::Approx(0.8 / (4 * M_PI * std::pow(rho, 3))).epsilon(1e-14));
  CHECK(e.coeff(0b10).real() == doctest::Approx(-0.3 / (4 * M_PI * std::pow(rho, 3))).epsilon(1e-14));
  Cmv e2 = classical_cauchy_kernel(1, gens, 1.6, (2.0 * x).eval());
  CHECK((e2 - e * cdouble(0.25, 0.0)).norm() <= 1e-14);

  FieldFn f;
  f.n = 1;
  f.f = [&gens](const Point& p) { return classical_cauchy_kernel(1, gens, p.x0, p.x); };
  FDConfig cfg;
  Point p = mk_point(0.5, {0.6, -0.2});
  CHECK(apply_classical_D_left(f, gens, p, cfg).norm() <= 1e-8);
  CHECK(apply_classical_D_right(f, gens, p, cfg).norm() <= 1e-8);
}

TEST_CASE("closed kernel integrals satisfy the recombination identities") {
  for (int n : {1, 2}) {
    Point p = (n == 1) ? mk_point(1.2, {0.3, 0.2}) : mk_point(1.2, {0.2, 0.1, -0.2, 0.15});
    auto ki = kernel_integrals_closed(n, p);
    CHECK((ki.I3 + ki.I4 - ki.I0).norm() <= 1e-13 * ki.I0.norm());
    Cmv f0 = witt_c(n, 0, false), f0d = witt_c(n, 0, true);
    Cmv alt = -ki.I2 + f0 * ki.I3 + f0d * ki.I4 + f0d * f0 * (ki.I1 + ki.I2);
    CHECK((alt - ki.I).norm() <= 1e-13 * ki.I.norm());
    KernelCoeffs kc = make_kernel_coeffs(n);
    Cmv e = ki.I * cdouble(-1.0 / (kc.lambda_n * sigma_sphere(2 * n + 1)), 0.0);
    CHECK((e - cauchy_kernel(n, p)).norm() <= 1e-12 * e.norm());
  }
  CHECK_THROWS_AS(kernel_integrals_closed(1, mk_point(0.5, {0.6, 0.3})), std::domain_error);
}

TEST_CASE("cauchy kernel solves both equations away from the half-line") {
  FDConfig cfg;
  for (int n : {1, 2}) {
    FieldFn f = cauchy_kernel_field(n);
    Point p = (n == 1) ? mk_point(-0.4, {0.5, 0.4}) : mk_point(0.3, {0.4, -0.3, 0.3, 0.2});
    CHECK(apply_D_left(f, p, cfg).norm() <= 1e-7);
    CHECK(apply_D_right(f, p, cfg).norm() <= 1e-7);
  }
  CHECK_THROWS_AS(cauchy_kernel(1, mk_point(-1.0, {0.0, 0.0})), std::domain_error);
}

TEST_CASE("derivative kernel matches the x0 derivative of the kernel") {
  FDConfig cfg;
  for (int n : {1, 2}) {
    FieldFn f = cauchy_kernel_field(n);
    Point p = (n == 1) ? mk_point(0.4, {0.6, -0.3}) : mk_point(-0.5, {0.5, 0.2, -0.3, 0.4});
    Cmv dfd = fd_gradient(f, p, cfg)[0];
    CHECK((derivative_kernel(n, p) - dfd).norm() <= 1e-8);
  }
  CHECK_THROWS_AS(derivative_kernel(1, mk_point(0.0, {0.0, 0.0})), std::domain_error);
}

TEST_CASE("derivative kernel homogeneity degree") {
  Point p = mk_point(0.4, {0.5, -0.2});
  for (double t : {0.5, 2.0}) {
    Cmv lhs = derivative_kernel(1, Point(t * p.x0, (t * p.x).eval()));
    Cmv rhs = derivative_kernel(1, p) * cdouble(std::pow(t, -3.0), 0.0);
    CHECK((lhs - rhs).norm() <= 1e-13 * rhs.norm());
  }
}

TEST_CASE("kernel on the positive axis is the removable limit") {
  Cmv on = cauchy_kernel(2, Point(0.9, Eigen::VectorXd::Zero(4)));
  Eigen::VectorXd tiny = Eigen::VectorXd::Zero(4);
  tiny(1) = 1e-9;
  Cmv near = cauchy_kernel(2, Point(0.9, tiny));
  CHECK((on - near).norm() <= 1e-8 * on.norm());
}

TEST_CASE("plane wave moments: closed form against direct integration at n = 1") {
  Point p = mk_point(1.0, {0.35, 0.2});
  auto ki = kernel_integrals_closed(1, p);
  PlaneWaveIntegralOptions opts;
  opts.sphere_degree = 48;
  Cmv i0 = integrate_plane_wave_moment(1, p, PlaneWaveMoment::I0, opts);
  CHECK((i0 - ki.I0).norm() <= 2e-5 * ki.I0.norm());
  Cmv i3 = integrate_plane_wave_moment(1, p, PlaneWaveMoment::I3, opts);
  CHECK((i3 - ki.I3).norm() <= 2e-4 * ki.I3.norm());
}
