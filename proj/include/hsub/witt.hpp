#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hsub/clifford.hpp"

namespace hsub {

/// Point (x0, x) in R^{2n+1}; x holds the coordinates
/// (x_1..x_n, x_{n+1}..x_{2n}) of the R^{2n} part.
struct Point {
  double x0 = 0.0;
  Eigen::VectorXd x;  // size 2n

  Point() = default;
  Point(double x0_, Eigen::VectorXd x_) : x0(x0_), x(std::move(x_)) {}

  int n_pairs() const { return int(x.size()) / 2; }
  double r() const { return x.norm(); }
};

/// Hermitian vector w in C^n with components w_j = u_j + i u_{n+j}.
struct HermitianVector {
  Eigen::VectorXcd w;

  HermitianVector() = default;
  explicit HermitianVector(Eigen::VectorXcd w_) : w(std::move(w_)) {}

  int n() const { return int(w.size()); }
  double norm() const { return w.norm(); }
  double norm_sq() const { return w.squaredNorm(); }
};

/// Witt basis elements on the generator pairing (e_j, e_{j+n+1}),
/// j = 0..n, inside the algebra with m = 2n+2 generators:
///   f_j = (e_j - i e_{j+n+1}) / 2,   f_j^dagger = -(e_j + i e_{j+n+1}) / 2.
template <class S>
Multivector<S> witt(int n_pairs, int j, bool dagger) {
  using traits = scalar_traits<S>;
  if (j < 0 || j > n_pairs) throw std::invalid_argument("witt index out of range");
  Multivector<S> r(n_pairs);
  const BladeMask e1 = BladeMask(1) << j;
  const BladeMask e2 = BladeMask(1) << (j + n_pairs + 1);
  S h;
  if constexpr (traits::exact)
    h = S(Dyadic(1, 1), Dyadic(0));
  else
    h = S(0.5, 0.0);
  S ih = traits::unit_i() * h;
  if (!dagger) {
    r.set(e1, h);
    r.set(e2, -ih);
  } else {
    r.set(e1, -h);
    r.set(e2, -ih);
  }
  return r;
}

inline Cmv witt_c(int n_pairs, int j, bool dagger) { return witt<std::complex<double>>(n_pairs, j, dagger); }
inline Xmv witt_x(int n_pairs, int j, bool dagger) { return witt<GaussianDyadic>(n_pairs, j, dagger); }

/// beta = sum_j f_j^dagger f_j (j = 1..n).
template <class S>
Multivector<S> beta_element(int n_pairs) {
  Multivector<S> r(n_pairs);
  for (int j = 1; j <= n_pairs; ++j)
    r = r + witt<S>(n_pairs, j, true) * witt<S>(n_pairs, j, false);
  return r;
}

/// Embeds x in R^{2n} as the 1-vector sum x_j e_j + x_{n+j} e_{j+n+1}.
inline Cmv embed_vector(int n_pairs, const Eigen::VectorXd& x) {
  Cmv r(n_pairs);
  for (int j = 1; j <= n_pairs; ++j) {
    r.set(BladeMask(1) << j, std::complex<double>(x(j - 1), 0.0));
    r.set(BladeMask(1) << (j + n_pairs + 1), std::complex<double>(x(n_pairs + j - 1), 0.0));
  }
  r.normalize();
  return r;
}

/// Witt vector sum_j v_j f_j for complex components v.
inline Cmv witt_vector(int n_pairs, const Eigen::VectorXcd& v, bool dagger = false) {
  Cmv r(n_pairs);
  for (int j = 1; j <= n_pairs; ++j) {
    std::complex<double> c = dagger ? std::conj(v(j - 1)) : v(j - 1);
    r = r + witt_c(n_pairs, j, dagger) * c;
  }
  return r;
}

/// x = z - z^dagger with z = sum z_j f_j, z_j = x_j + i x_{n+j}.
inline std::pair<Cmv, Cmv> hermitian_split(const Point& p) {
  const int n = p.n_pairs();
  Eigen::VectorXcd z(n);
  for (int j = 0; j < n; ++j) z(j) = std::complex<double>(p.x(j), p.x(n + j));
  return {witt_vector(n, z, false), witt_vector(n, z, true)};
}

inline Cmv hermitian_vector_mv(int n_pairs, const HermitianVector& w, bool dagger = false) {
  return witt_vector(n_pairs, w.w, dagger);
}

/// Components of the unique splitting v = A + f_0 B + f_0^dagger C +
/// f_0^dagger f_0 D with A,B,C,D free of the generators e_0, e_{n+1}.
template <class S>
struct ABCDParts {
  Multivector<S> A, B, C, D;
};

/// Exact linear change of basis on the distinguished pair, using
/// e_0 = f_0 - f_0^dagger, e_{n+1} = i (f_0 + f_0^dagger),
/// e_0 e_{n+1} = i - 2 i f_0^dagger f_0.
template <class S>
ABCDParts<S> decompose_ABCD(const Multivector<S>& v) {
  using traits = scalar_traits<S>;
  const int n = v.n_pairs();
  const int gens = v.gens();
  const BladeMask b0 = 1;
  const BladeMask b1 = BladeMask(1) << (n + 1);
  ABCDParts<S> out{Multivector<S>(n), Multivector<S>(n), Multivector<S>(n), Multivector<S>(n)};
  const S I = traits::unit_i();
  for (auto& [mask, coef] : v.coeffs()) {
    BladeMask pair = mask & (b0 | b1);
    BladeMask core = mask & ~(b0 | b1);
    // e_pair * e_core = sgn * e_mask, so the coefficient on the ordered
    // form e_pair e_core is sgn * coef.
    auto [sgn, mm] = blade_product(pair, core, gens);
    (void)mm;
    S c = (sgn < 0) ? -coef : coef;
    if (pair == 0) {
      out.A.add_to(core, c);
    } else if (pair == b0) {  // e_0 = f_0 - f_0^dagger
      out.B.add_to(core, c);
      out.C.add_to(core, -c);
    } else if (pair == b1) {  // e_{n+1} = i f_0 + i f_0^dagger
      out.B.add_to(core, I * c);
      out.C.add_to(core, I * c);
    } else {  // e_0 e_{n+1} = i - 2 i f_0^dagger f_0
      out.A.add_to(core, I * c);
      out.D.add_to(core, -(I + I) * c);
    }
  }
  out.A.normalize(); out.B.normalize(); out.C.normalize(); out.D.normalize();
  return out;
}

template <class S>
Multivector<S> recompose(const ABCDParts<S>& p) {
  const int n = p.A.n_pairs();
  Multivector<S> f0 = witt<S>(n, 0, false), f0d = witt<S>(n, 0, true);
  return p.A + f0 * p.B + f0d * p.C + f0d * f0 * p.D;
}

/// Boundary normal element n = f_0 nu_0 + f_0^dagger nu_0
/// + f_0 f_0^dagger nu + f_0^dagger f_0 nu^dagger built from the
/// outward unit normal (nu_0, nu) in R^{2n+1}.
inline Cmv normal_element(int n_pairs, double nu0, const Eigen::VectorXd& nu) {
  Cmv f0 = witt_c(n_pairs, 0, false), f0d = witt_c(n_pairs, 0, true);
  Eigen::VectorXcd vw(n_pairs);
  for (int j = 0; j < n_pairs; ++j) vw(j) = std::complex<double>(nu(j), nu(n_pairs + j));
  Cmv nw = witt_vector(n_pairs, vw, false);
  Cmv nwd = witt_vector(n_pairs, vw, true);
  std::complex<double> c0(nu0, 0.0);
  return f0 * c0 + f0d * c0 + f0 * f0d * nw + f0d * f0 * nwd;
}

}  // namespace hsub
