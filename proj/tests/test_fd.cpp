#include <cmath>

#include "doctest.h"
#include "hsub/fd.hpp"
#include "hsub/kernels.hpp"

using namespace hsub;

namespace {

Point mk_point(double x0, std::initializer_list<double> xs) {
  Eigen::VectorXd x(int(xs.size()));
  int i = 0;
  for (double v : xs) x(i++) = v;
  return Point(x0, x);
}

}  // namespace

TEST_CASE("operator on constants vanishes identically") {
  FieldFn f;
  f.n = 1;
  Cmv v = Cmv::scalar(1, {2.0, -1.0}) + Cmv::blade(1, 0b101, {0.3, 0.0});
  f.f = [v](const Point&) { return v; };
  FDConfig cfg;
  Point p = mk_point(0.2, {0.4, -0.3});
  CHECK(apply_D_left(f, p, cfg).norm() == 0.0);
  CHECK(apply_D_right(f, p, cfg).norm() == 0.0);
}

TEST_CASE("operator on x0 gives the Witt pair average") {
  FieldFn f;
  f.n = 1;
  f.f = [](const Point& p) { return Cmv::scalar(1, {p.x0, 0.0}); };
  FDConfig cfg;
  Point p = mk_point(0.1, {0.2, 0.3});
  Cmv want = (witt_c(1, 0, false) + witt_c(1, 0, true)) * cdouble(0.5, 0.0);
  CHECK((apply_D_left(f, p, cfg) - want).norm() <= 1e-12);
  CHECK((apply_D_right(f, p, cfg) - want).norm() <= 1e-12);
}

TEST_CASE("holomorphic coordinate fields feed the right Witt slots") {
  FieldFn fz;  // z_1 = x_1 + i x_{n+1}
  fz.n = 2;
  fz.f = [](const Point& p) { return Cmv::scalar(2, cdouble(p.x(0), p.x(2))); };
  FDConfig cfg;
  Point p = mk_point(0.0, {0.1, -0.2, 0.4, 0.9});
  CHECK((apply_dirac_z(fz, p, cfg) - witt_c(2, 1, true)).norm() <= 1e-11);
  CHECK(apply_dirac_zdag(fz, p, cfg).norm() <= 1e-11);
}

TEST_CASE("laplacian factorization holds on |x|^2") {
  FieldFn f;
  f.n = 1;
  f.f = [](const Point& p) { return Cmv::scalar(1, {p.x.squaredNorm(), 0.0}); };
  FDConfig cfg;
  Point p = mk_point(0.0, {0.3, -0.1});
  Cmv lap = laplacian_2n(f, p, cfg);
  CHECK(lap.coeff(0).real() == doctest::Approx(4.0).epsilon(1e-8));
  FieldFn gz, gzd;
  gz.n = gzd.n = 1;
  gz.f = [&](const Point& q) { return apply_dirac_z(f, q, cfg); };
  gzd.f = [&](const Point& q) { return apply_dirac_zdag(f, q, cfg); };
  Cmv mixed = (apply_dirac_z(gzd, p, cfg) + apply_dirac_zdag(gz, p, cfg)) * cdouble(4.0, 0.0);
  CHECK((mixed - lap).norm() <= 1e-7);
}

TEST_CASE("richardson differences converge at fourth order") {
  FieldFn f;
  f.n = 1;
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.2, 0.8)).finished()};
  f = plane_wave_P(1, w);
  Point p = mk_point(0.15, {0.3, -0.2});
  FDConfig c1, c2;
  c1.h = 8e-3;
  c2.h = 4e-3;
  double r1 = apply_D_left(f, p, c1).norm();
  double r2 = apply_D_left(f, p, c2).norm();
  CHECK(r2 <= r1 / 6.0);
}

TEST_CASE("central schemes also annihilate the plane wave") {
  FieldFn f;
  f.n = 1;
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(0.9, -0.4)).finished()};
  f = plane_wave_P(1, w);
  Point p = mk_point(-0.2, {0.5, 0.1});
  FDConfig c2, c4;
  c2.scheme = FDConfig::Scheme::Central2;
  c4.scheme = FDConfig::Scheme::Central4;
  CHECK(apply_D_left(f, p, c2).norm() <= 1e-5);
  CHECK(apply_D_left(f, p, c4).norm() <= 1e-9);
}

TEST_CASE("biharmonic residual flags non-solutions") {
  FieldFn f;
  f.n = 1;
  f.f = [](const Point& p) { return Cmv::scalar(1, {std::pow(p.x0, 4.0), 0.0}); };
  FDConfig cfg;
  Point p = mk_point(0.3, {0.2, 0.1});
  CHECK(biharmonic_residual(f, p, cfg) == doctest::Approx(24.0).epsilon(1e-6));
  FieldFn c;
  c.n = 1;
  c.f = [](const Point&) { return Cmv::scalar(1, {1.0, 0.0}); };
  CHECK(biharmonic_residual(c, p, cfg) == 0.0);
}

TEST_CASE("system equivalence is an algebraic identity") {
  FieldFn f;
  f.n = 1;
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.0, 0.5)).finished()};
  f = plane_wave_P(1, w);
  FDConfig cfg;
  Point p = mk_point(0.1, {0.4, 0.2});
  CHECK(system_equivalence_residual(f, p, cfg) <= 1e-12);
  // also for a field that is nowhere a solution
  FieldFn g;
  g.n = 1;
  g.f = [](const Point& q) {
    return Cmv::blade(1, 0b1, cdouble(q.x0 * q.x0, q.x(0))) +
           Cmv::scalar(1, cdouble(std::sin(q.x(1)), 0.0));
  };
  CHECK(system_equivalence_residual(g, p, cfg) <= 1e-10);
}

TEST_CASE("full-mode fields differentiate in y0 as well") {
  // f(z0, x) = z0 as a scalar field: d/dz0 f = 1, d/dzbar0 f = 0,
  // so D f = f0^dagger
  FieldFn f;
  f.n = 1;
  f.f_full = [](cdouble z0, const Eigen::VectorXd&) { return Cmv::scalar(1, z0); };
  FDConfig cfg;
  Point p = mk_point(0.2, {0.1, -0.3});
  CHECK((apply_D_left(f, p, cfg) - witt_c(1, 0, true)).norm() <= 1e-11);
}

TEST_CASE("y0 derivatives are rejected in slice mode") {
  FieldFn f;
  f.n = 1;
  f.f = [](const Point& p) { return Cmv::scalar(1, {p.x0, 0.0}); };
  // gradient in slice mode has 2n+1 entries only
  FDConfig cfg;
  Point p = mk_point(0.0, {0.1, 0.2});
  CHECK(fd_gradient(f, p, cfg).size() == 3);
}
