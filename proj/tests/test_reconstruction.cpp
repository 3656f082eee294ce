#include <cmath>

#include "doctest.h"
#include "hsub/reconstruction.hpp"

using namespace hsub;

namespace {

Point mk_point(double x0, std::initializer_list<double> xs) {
  Eigen::VectorXd x(int(xs.size()));
  int i = 0;
  for (double v : xs) x(i++) = v;
  return Point(x0, x);
}

}  // namespace

TEST_CASE("stokes pairing on trivial fields") {
  FieldFn one;
  one.n = 1;
  one.f = [](const Point&) { return Cmv::scalar(1, {1.0, 0.0}); };
  StokesOptions opts;
  Point center(0.0, Eigen::VectorXd::Zero(2));
  auto res = stokes_residual(one, one, center, 1.0, opts);
  CHECK(res.boundary.norm() <= 1e-12);
  CHECK(res.residual <= 1e-12);
}

TEST_CASE("stokes pairing on the linear field") {
  FieldFn one, g;
  one.n = g.n = 1;
  one.f = [](const Point&) { return Cmv::scalar(1, {1.0, 0.0}); };
  g.f = [](const Point& p) { return Cmv::scalar(1, {p.x0, 0.0}); };
  StokesOptions opts;
  Point center(0.0, Eigen::VectorXd::Zero(2));
  auto res = stokes_residual(one, g, center, 1.0, opts);
  double vol = 4.0 * M_PI / 3.0;
  Cmv want = (witt_c(1, 0, false) + witt_c(1, 0, true)) * cdouble(vol, 0.0);
  CHECK((res.boundary - want).norm() <= 1e-6);
  CHECK(res.residual <= 1e-6);
}

TEST_CASE("boundary representation of the x0 derivative") {
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.1, 0.4)).finished()};
  FieldFn F = plane_wave_P(1, w);
  Point u = mk_point(0.05, {0.1, -0.05});
  Cmv got = reconstruct_dx0(F, u, 0.4, u);
  FDConfig fd;
  Cmv want = fd_gradient(F, u, fd)[0];
  CHECK((got - want).norm() <= 1e-3 * want.norm());
  CHECK_THROWS_AS(reconstruct_dx0(F, u, 0.4, mk_point(0.7, {0.0, 0.0})), std::invalid_argument);
}

TEST_CASE("boundary representation is radius-independent for solutions") {
  // for a two-sided solution the small-sphere integral is already exact
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(0.9, -0.6)).finished()};
  FieldFn F = plane_wave_P(1, w);
  Point u = mk_point(0.0, {0.15, 0.1});
  FDConfig fd;
  Cmv want = fd_gradient(F, u, fd)[0];
  Cmv combo = local_limit_combination(F, u, fd);
  CHECK((combo - want).norm() <= 1e-8);
  CHECK((eps_sphere_integral(F, u, 0.2) - want).norm() <= 1e-9);
  CHECK((eps_sphere_integral(F, u, 0.05) - want).norm() <= 1e-9);
}

TEST_CASE("small-sphere integrals of a generic field approach the local combination") {
  // the local limit holds for any C^1 field, not only solutions
  FieldFn F;
  F.n = 1;
  F.f = [](const Point& p) {
    Cmv v = Cmv::scalar(1, cdouble(std::exp(0.4 * p.x0) * std::cos(p.x(0)), 0.3 * p.x(1)));
    v.add_to(0b1, cdouble(p.x(1) * p.x(1) + 0.5 * p.x0 * p.x(0), 0.0));
    return v;
  };
  Point u = mk_point(0.1, {0.2, -0.1});
  FDConfig fd;
  Cmv combo = local_limit_combination(F, u, fd);
  double e1 = (eps_sphere_integral(F, u, 0.2) - combo).norm();
  double e2 = (eps_sphere_integral(F, u, 0.1) - combo).norm();
  double e3 = (eps_sphere_integral(F, u, 0.05) - combo).norm();
  CHECK(e2 < e1);
  CHECK(e3 < e2);
  CHECK(e3 <= 0.3 * e1);
}

TEST_CASE("cylinder reconstruction of a decaying wave") {
  HermitianVector w{(Eigen::VectorXcd(1) << cdouble(1.2, 0.5)).finished()};
  FieldFn F = decaying_plane_wave(1, w);
  Point u = mk_point(-0.3, {0.25, 0.1});
  auto res = reconstruct_F_cylinder(F, 0.5, 1.0, -30.0 / w.norm(), u, w.norm());
  Cmv want = F.f(u);
  CHECK((res.value - want).norm() <= 1e-2 * want.norm());
  CHECK(res.tail_bound < 1e-6);
  CHECK_THROWS_AS(reconstruct_F_cylinder(F, 0.5, 1.0, -10.0, mk_point(0.8, {0.0, 0.0}), 1.0),
                  std::invalid_argument);
  // a shallow truncation violates a strict tail budget
  CylinderOptions strict;
  strict.tail_budget = 1e-12;
  CHECK_THROWS_AS(reconstruct_F_cylinder(F, 0.5, 1.0, -2.0, u, w.norm(), strict),
                  std::runtime_error);
}
