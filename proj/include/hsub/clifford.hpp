#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <sstream>
#include <cmath>

#include "hsub/dyadic.hpp"

namespace hsub {

using cdouble = std::complex<double>;

/// Basis blades of the complex Clifford algebra with generators
/// e_0,...,e_{m-1}, all squaring to -1, are encoded as bitmasks:
/// bit k set means e_k is a factor of the blade.
using BladeMask = std::uint32_t;

/// Number of transpositions needed to merge e_A e_B into canonical
/// ascending order: pairs (a in A, b in B) with a > b.
inline int blade_reorder_swaps(BladeMask a, BladeMask b) {
  int total = 0;
  a >>= 1;
  while (a) {
    total += std::popcount(a & b);
    a >>= 1;
  }
  return total;
}

/// e_A e_B = sign * e_{A xor B}; the sign collects the reordering
/// transpositions and one factor -1 per shared generator (e_k^2 = -1).
inline std::pair<int, BladeMask> blade_product(BladeMask a, BladeMask b, int gens) {
  const BladeMask lim = (gens >= 32) ? ~BladeMask(0) : ((BladeMask(1) << gens) - 1);
  if ((a & ~lim) || (b & ~lim))
    throw std::invalid_argument("blade mask out of range for algebra dimension");
  int swaps = blade_reorder_swaps(a, b) + std::popcount(a & b);
  return {(swaps & 1) ? -1 : +1, a ^ b};
}

/// Sign of blade conjugation: reverse the factors and flip each one,
/// giving (-1)^{k(k+1)/2} on a grade-k blade.
inline int blade_conj_sign(BladeMask a) {
  int k = std::popcount(a);
  return ((k * (k + 1) / 2) & 1) ? -1 : +1;
}

/// Sparse multivector over the complex Clifford algebra with m = 2n+2
/// generators. Scalar is the coefficient ring: complex<double> for
/// numerics, GaussianDyadic for the exact identity suites. Values are
/// immutable in spirit; every operation returns a fresh object.
template <class Scalar>
class Multivector {
 public:
  using traits = scalar_traits<Scalar>;

  explicit Multivector(int n_pairs) : n_(check_n(n_pairs)) {}

  static Multivector zero(int n_pairs) { return Multivector(n_pairs); }
  static Multivector scalar(int n_pairs, Scalar v) {
    Multivector r(n_pairs);
    r.set(0, v);
    return r;
  }
  static Multivector blade(int n_pairs, BladeMask mask, Scalar v) {
    Multivector r(n_pairs);
    r.set(mask, v);
    return r;
  }

  int n_pairs() const { return n_; }
  int gens() const { return 2 * n_ + 2; }

  const std::map<BladeMask, Scalar>& coeffs() const { return c_; }

  Scalar coeff(BladeMask mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? traits::zero() : it->second;
  }

  void set(BladeMask mask, const Scalar& v) {
    check_mask(mask);
    if (traits::exactly_zero(v))
      c_.erase(mask);
    else
      c_[mask] = v;
  }

  void add_to(BladeMask mask, const Scalar& v) {
    check_mask(mask);
    auto it = c_.find(mask);
    if (it == c_.end()) {
      if (!traits::exactly_zero(v)) c_[mask] = v;
    } else {
      it->second = it->second + v;
      if (traits::exactly_zero(it->second)) c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }

  /// Canonical sparse form: exact zeros are never stored; in floating
  /// mode coefficients below 2^-50 of the largest magnitude are dropped
  /// (blade signs are integer arithmetic and never at risk).
  void normalize() {
    if constexpr (traits::exact) {
      return;  // add_to/set already keep exact zeros out
    } else {
      if (c_.empty()) return;
      double mx = 0.0;
      for (auto& [m, v] : c_) mx = std::max(mx, traits::abs2(v));
      const double cut = mx * std::ldexp(1.0, -100);  // (2^-50)^2 on |.|^2
      for (auto it = c_.begin(); it != c_.end();) {
        if (traits::abs2(it->second) <= cut)
          it = c_.erase(it);
        else
          ++it;
      }
    }
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    check_same(a, b);
    Multivector r = a;
    for (auto& [m, v] : b.c_) r.add_to(m, v);
    r.normalize();
    return r;
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    check_same(a, b);
    Multivector r = a;
    for (auto& [m, v] : b.c_) r.add_to(m, -v);
    r.normalize();
    return r;
  }
  Multivector operator-() const {
    Multivector r(n_);
    for (auto& [m, v] : c_) r.c_[m] = -v;
    return r;
  }
  friend Multivector operator*(const Scalar& s, const Multivector& a) {
    Multivector r(a.n_);
    if (traits::exactly_zero(s)) return r;
    for (auto& [m, v] : a.c_) {
      Scalar p = s * v;
      if (!traits::exactly_zero(p)) r.c_[m] = p;
    }
    r.normalize();
    return r;
  }
  friend Multivector operator*(const Multivector& a, const Scalar& s) { return s * a; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    check_same(a, b);
    Multivector r(a.n_);
    for (auto& [ma, va] : a.c_) {
      for (auto& [mb, vb] : b.c_) {
        auto [sgn, mm] = blade_product(ma, mb, a.gens());
        Scalar p = va * vb;
        if (sgn < 0) p = -p;
        r.add_to(mm, p);
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// Sum of |coefficient|^2; equals the scalar part of c^dagger c.
  double norm_sq() const {
    double s = 0.0;
    for (auto& [m, v] : c_) s += traits::abs2(v);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  std::string to_string() const {
    std::ostringstream os;
    if (c_.empty()) return "0";
    bool first = true;
    for (auto& [m, v] : c_) {
      if (!first) os << " + ";
      first = false;
      if constexpr (traits::exact)
        os << "(" << v.re.to_double() << (v.im.to_double() < 0 ? "" : "+") << v.im.to_double() << "i)";
      else
        os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
      if (m) {
        os << "*e{";
        for (int k = 0; k < 32; ++k)
          if (m & (BladeMask(1) << k)) os << k << ",";
        os << "}";
      }
    }
    return os.str();
  }

 private:
  static int check_n(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("n_pairs out of supported range");
    return n;
  }
  void check_mask(BladeMask m) const {
    if (m >= (BladeMask(1) << gens()))
      throw std::invalid_argument("blade mask out of range");
  }
  static void check_same(const Multivector& a, const Multivector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("multivector dimension mismatch");
  }

  int n_;
  std::map<BladeMask, Scalar> c_;
};

using Cmv = Multivector<std::complex<double>>;
using Xmv = Multivector<GaussianDyadic>;

/// Projection on the space of k-vectors.
template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.gens()) throw std::invalid_argument("grade out of range");
  Multivector<S> r(a.n_pairs());
  for (auto& [m, v] : a.coeffs())
    if (std::popcount(m) == k) r.set(m, v);
  return r;
}

/// Clifford conjugation extended C-linearly: blades are reversed and
/// flipped, coefficients untouched.
template <class S>
Multivector<S> conjugate(const Multivector<S>& a) {
  Multivector<S> r(a.n_pairs());
  for (auto& [m, v] : a.coeffs()) r.set(m, blade_conj_sign(m) < 0 ? -v : v);
  return r;
}

/// Hermitian conjugation c = a + ib -> conj(a) - i conj(b): blade
/// conjugation together with complex conjugation of coefficients.
/// Anti-automorphism: (ab)^dagger = b^dagger a^dagger.
template <class S>
Multivector<S> hermitian_conj(const Multivector<S>& a) {
  using traits = scalar_traits<S>;
  Multivector<S> r(a.n_pairs());
  for (auto& [m, v] : a.coeffs()) {
    S w = traits::conj(v);
    r.set(m, blade_conj_sign(m) < 0 ? -w : w);
  }
  return r;
}

/// Scalar part of c^dagger c, computed exactly in the exact ring.
template <class S>
S norm_sq_scalar(const Multivector<S>& a) {
  Multivector<S> p = hermitian_conj(a) * a;
  return p.coeff(0);
}

template <class S>
double mv_norm(const Multivector<S>& a) {
  return a.norm();
}

}  // namespace hsub
