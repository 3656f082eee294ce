#include <complex>

#include "doctest.h"
#include "hsub/quadrature.hpp"
#include "hsub/special.hpp"

using namespace hsub;

TEST_CASE("double factorial conventions") {
  CHECK(double_factorial(5) == 15.0);
  CHECK(double_factorial(0) == 1.0);
  CHECK(double_factorial(-1) == 1.0);
  CHECK(double_factorial(8) == 384.0);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(1) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(gamma_half(3) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-15));
  CHECK(gamma_half(6) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_half(0), std::domain_error);
}

TEST_CASE("beta function") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("sphere surface areas") {
  CHECK(sigma_sphere(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sigma_sphere(2) == doctest::Approx(2 * M_PI).epsilon(1e-15));
  CHECK(sigma_sphere(3) == doctest::Approx(4 * M_PI).epsilon(1e-15));
  CHECK(sigma_sphere(4) == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-15));
  CHECK(sigma_sphere(6) == doctest::Approx(std::pow(M_PI, 3)).epsilon(1e-14));
}

TEST_CASE("gegenbauer recurrence values") {
  CHECK(gegenbauer(0, 0.7, 0.2) == 1.0);
  CHECK(gegenbauer(1, 1.0, 0.3) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(gegenbauer(2, 1.0, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("exponential power moments") {
  CHECK(exp_power_moment(1, {-1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exp_power_moment(0, {-2.0, 0.0}).real() == doctest::Approx(0.5).epsilon(1e-15));
  // complex decay against adaptive quadrature
  cdouble alpha(-1.0, 0.5);
  cdouble q = adapt_integrate([&](double x) { return x * x * x * std::exp(alpha * x); }, 0.0, 80.0,
                              1e-13, 1e-16);
  CHECK(std::abs(q - exp_power_moment(3, alpha)) <= 1e-10 * std::abs(q));
  CHECK_THROWS_AS(exp_power_moment(1, {0.5, 0.0}), std::domain_error);
}

TEST_CASE("antiderivative polynomial") {
  CHECK(radical_antiderivative_coeff(1, 0) == doctest::Approx(-1.0));
  CHECK(radical_antiderivative_poly(1, 0.37) == doctest::Approx(-1.0));
  // recurrence 2 (j+1) a_{j+1} = (2n - 2j - 1) a_j
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; j < n - 1; ++j) {
      double lhs = 2.0 * (j + 1) * radical_antiderivative_coeff(n, j + 1);
      double rhs = (2.0 * n - 2.0 * j - 1.0) * radical_antiderivative_coeff(n, j);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
  CHECK_THROWS_AS(radical_antiderivative_coeff(2, 5), std::domain_error);
}

TEST_CASE("odd moment series equals closed form") {
  for (int n : {1, 2, 3})
    for (double x : {0.3, 0.5, 0.9}) {
      auto s = odd_moment_series(n, x);
      double closed = odd_moment_closed(n, x);
      CHECK(std::abs(s.sum.real() - closed) <= s.tail_bound + 1e-12);
    }
  CHECK_THROWS_AS(odd_moment_series(1, 1.5), std::domain_error);
  CHECK_THROWS_AS(odd_moment_closed(1, 0.0), std::domain_error);
}

TEST_CASE("odd moment limit at zero") {
  for (int n : {1, 2})
    CHECK(odd_moment_closed(n, 0.01) ==
          doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-3));
}

TEST_CASE("zonal moments: frozen m = 3 example") {
  // antiderivative gives exactly 32/25 at x0 = 1, r = 1/2
  cdouble v = zonal_moment_closed(0, 3, 1.0, 0.5);
  CHECK(v.real() == doctest::Approx(32.0 / 25.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("zonal moments against quadrature") {
  auto quad = [](int q, int m, double x0, double r) {
    return adapt_integrate(
        [&](double th) {
          double t = std::cos(th), s = std::sin(th);
          return std::pow(t, q) * std::pow(s, m - 2) / std::pow(cdouble(x0, -r * t), m);
        },
        0.0, M_PI, 1e-12, 1e-15);
  };
  for (int m : {2, 3, 4, 6}) {
    cdouble got0 = zonal_moment_closed(0, m, 1.3, 0.6);
    CHECK(std::abs(got0 - quad(0, m, 1.3, 0.6)) <= 1e-9 * std::abs(got0));
    cdouble got1 = zonal_moment_closed(1, m, 1.3, 0.6);
    CHECK(std::abs(got1 - quad(1, m, 1.3, 0.6)) <= 1e-9 * std::abs(got1));
  }
  for (int n : {1, 2}) {
    cdouble got2 = zonal_moment_closed(2, n, 1.3, 0.6);
    CHECK(std::abs(got2 - quad(2, 2 * n, 1.3, 0.6)) <= 1e-9 * std::abs(got2));
  }
  CHECK_THROWS_AS(zonal_moment_closed(0, 2, 0.5, 0.6), std::domain_error);
}

TEST_CASE("series partial sums converge to the closed forms") {
  for (int m : {1, 3})
    for (double x : {-0.9, 0.5, 0.9}) {
      auto s = binomial_series_sum(m, x);
      CHECK(std::abs(s.sum.real() - std::pow(1.0 - x, -m)) <= s.tail_bound + 1e-13);
    }
  for (int m : {2, 4})
    for (double x : {0.25, 0.81}) {
      auto s = inv_sqrt_power_series_sum(m, x);
      CHECK(std::abs(s.sum.real() - std::pow(1.0 + x, -0.5 * (m + 1))) <= s.tail_bound + 1e-13);
    }
}
