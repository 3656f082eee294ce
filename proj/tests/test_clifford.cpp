#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "hsub/clifford.hpp"
#include "hsub/witt.hpp"

using namespace hsub;

namespace {

// Independent sign oracle: blades as index lists, products by
// concatenation, bubble sort with transposition counting, and removal
// of equal neighbours with e_k^2 = -1.
std::pair<int, BladeMask> naive_blade_product(BladeMask a, BladeMask b) {
  std::vector<int> idx;
  for (int k = 0; k < 32; ++k)
    if (a & (BladeMask(1) << k)) idx.push_back(k);
  for (int k = 0; k < 32; ++k)
    if (b & (BladeMask(1) << k)) idx.push_back(k);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
        moved = true;
      } else if (idx[i] == idx[i + 1]) {
        idx.erase(idx.begin() + i, idx.begin() + i + 2);
        sign = -sign;  // e_k e_k = -1
        moved = true;
        break;
      }
    }
  }
  BladeMask m = 0;
  for (int k : idx) m |= BladeMask(1) << k;
  return {sign, m};
}

}  // namespace

TEST_CASE("blade product against exhaustive sign oracle") {
  const int gens = 6;  // n = 2
  for (BladeMask a = 0; a < (1u << gens); ++a)
    for (BladeMask b = 0; b < (1u << gens); ++b) {
      auto [s1, m1] = blade_product(a, b, gens);
      auto [s2, m2] = naive_blade_product(a, b);
      CHECK(s1 == s2);
      CHECK(m1 == m2);
    }
}

TEST_CASE("blade product random spot checks at n = 3") {
  std::mt19937_64 rng(99);
  const int gens = 8;
  for (int t = 0; t < 2000; ++t) {
    BladeMask a = BladeMask(rng() & 0xffu), b = BladeMask(rng() & 0xffu);
    auto [s1, m1] = blade_product(a, b, gens);
    auto [s2, m2] = naive_blade_product(a, b);
    CHECK(s1 == s2);
    CHECK(m1 == m2);
  }
}

TEST_CASE("blade product frozen examples") {
  const int gens = 4;
  auto r1 = blade_product(0b10, 0b10, gens);  // e1 e1 = -1
  CHECK(r1.first == -1);
  CHECK(r1.second == 0);
  auto r2 = blade_product(0b10, 0b100, gens);  // e1 e2 = e12
  CHECK(r2.first == 1);
  CHECK(r2.second == 0b110);
  auto r3 = blade_product(0b110, 0b10, gens);  // e12 e1 = e2
  CHECK(r3.first == 1);
  CHECK(r3.second == 0b100);
}

TEST_CASE("blade product rejects out-of-range masks") {
  CHECK_THROWS_AS(blade_product(1u << 5, 1, 4), std::invalid_argument);
  Cmv a(1);
  Cmv b(2);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(Cmv::blade(1, 1u << 10, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("multivector product expansion and unit") {
  Cmv one = Cmv::scalar(1, {1.0, 0.0});
  Cmv e1 = Cmv::blade(1, 0b10, {1.0, 0.0});
  Cmv prod = (one + e1) * (one - e1);
  CHECK((prod - Cmv::scalar(1, {2.0, 0.0})).norm() == 0.0);
  Cmv f1 = witt_c(1, 1, false);
  CHECK((f1 * f1).norm() == 0.0);
}

TEST_CASE("associativity on random exact multivectors") {
  std::mt19937_64 rng(7);
  auto rand_mv = [&](int n) {
    Xmv v(n);
    for (int t = 0; t < 5; ++t) {
      BladeMask m = BladeMask(rng() & ((1u << (2 * n + 2)) - 1));
      v.add_to(m, GaussianDyadic(Dyadic(std::int64_t(rng() % 9) - 4, int(rng() % 3)),
                                 Dyadic(std::int64_t(rng() % 9) - 4, int(rng() % 3))));
    }
    return v;
  };
  for (int t = 0; t < 30; ++t) {
    Xmv a = rand_mv(2), b = rand_mv(2), c = rand_mv(2);
    CHECK(((a * b) * c - a * (b * c)).is_zero());
  }
}

TEST_CASE("grade projection definition and completeness") {
  Cmv v = Cmv::scalar(2, {1.0, 0.0}) + Cmv::blade(2, 0b10, {1.0, 0.0}) +
          Cmv::blade(2, 0b110, {1.0, 0.0});
  CHECK((grade_project(v, 1) - Cmv::blade(2, 0b10, {1.0, 0.0})).norm() == 0.0);
  CHECK(grade_project(Cmv::blade(2, 0b110, {1.0, 0.0}), 0).is_zero());
  CHECK_THROWS_AS(grade_project(v, -1), std::invalid_argument);
  CHECK_THROWS_AS(grade_project(v, 7), std::invalid_argument);
}

TEST_CASE("conjugations") {
  Cmv e1 = Cmv::blade(1, 0b10, {1.0, 0.0});
  CHECK((conjugate(e1) + e1).norm() == 0.0);
  Cmv i1 = Cmv::scalar(1, {0.0, 1.0});
  CHECK((hermitian_conj(i1) + i1).norm() == 0.0);
  CHECK((hermitian_conj(witt_c(1, 0, false)) - witt_c(1, 0, true)).norm() == 0.0);
  CHECK((hermitian_conj(witt_c(1, 1, false)) - witt_c(1, 1, true)).norm() == 0.0);
}

TEST_CASE("norm values") {
  Cmv one = Cmv::scalar(1, {1.0, 0.0});
  Cmv e1 = Cmv::blade(1, 0b10, {1.0, 0.0});
  CHECK(one.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK((one + e1).norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(witt_c(1, 1, false).norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  // norm squared is the scalar part of c^dagger c
  Cmv v = Cmv::blade(2, 0b1011, {0.3, -0.2}) + Cmv::scalar(2, {1.0, 2.0});
  Cmv p = hermitian_conj(v) * v;
  CHECK(p.coeff(0).real() == doctest::Approx(v.norm_sq()).epsilon(1e-14));
}

TEST_CASE("witt basis identities for every pair") {
  for (int n = 1; n <= 3; ++n) {
    for (int j = 0; j <= n; ++j) {
      Xmv fj = witt_x(n, j, false), fjd = witt_x(n, j, true);
      CHECK((fj * fjd + fjd * fj - Xmv::scalar(n, GaussianDyadic(1))).is_zero());
      CHECK((fj * fj).is_zero());
      CHECK((fjd * fjd).is_zero());
    }
    CHECK_THROWS_AS(witt_x(n, n + 1, false), std::invalid_argument);
  }
}

TEST_CASE("hermitian split and embedding") {
  Eigen::VectorXd x(2);
  x << 1.0, 0.0;
  Point p(0.3, x);
  auto [z, zd] = hermitian_split(p);
  CHECK((z - witt_c(1, 1, false)).norm() == 0.0);
  CHECK((zd - witt_c(1, 1, true)).norm() == 0.0);
  Point zero(0.0, Eigen::VectorXd::Zero(2));
  auto [z0, zd0] = hermitian_split(zero);
  CHECK(z0.is_zero());
  CHECK(zd0.is_zero());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXd y(4);
    for (int i = 0; i < 4; ++i) y(i) = double(int(rng() % 17) - 8) / 4.0;
    Point q(0.0, y);
    auto [zq, zdq] = hermitian_split(q);
    CHECK((zq - zdq - embed_vector(2, y)).norm() == 0.0);
  }
}

TEST_CASE("ABCD splitting is exact and component-clean") {
  std::mt19937_64 rng(17);
  const int n = 2;
  const BladeMask pairbits = 1u | (1u << (n + 1));
  for (int t = 0; t < 40; ++t) {
    Xmv v(n);
    for (int k = 0; k < 8; ++k) {
      BladeMask m = BladeMask(rng() & ((1u << (2 * n + 2)) - 1));
      v.add_to(m, GaussianDyadic(Dyadic(std::int64_t(rng() % 9) - 4, int(rng() % 2)),
                                 Dyadic(std::int64_t(rng() % 9) - 4, int(rng() % 2))));
    }
    auto parts = decompose_ABCD(v);
    for (const Xmv* q : {&parts.A, &parts.B, &parts.C, &parts.D})
      for (auto& [m, co] : q->coeffs()) CHECK((m & pairbits) == 0);
    CHECK((recompose(parts) - v).is_zero());
  }
}

TEST_CASE("normal element along the vertical direction") {
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(2);
  Cmv nel = normal_element(1, 1.0, nu);
  CHECK((nel - witt_c(1, 0, false) - witt_c(1, 0, true)).norm() == 0.0);
}

TEST_CASE("dyadic arithmetic") {
  Dyadic a(3, 1), b(1, 2);  // 3/2, 1/4
  CHECK((a + b).to_double() == doctest::Approx(1.75));
  CHECK((a * b).to_double() == doctest::Approx(0.375));
  CHECK((a - a).is_zero());
  GaussianDyadic i = GaussianDyadic::unit_i();
  CHECK((i * i + GaussianDyadic(1)).is_zero());
}
