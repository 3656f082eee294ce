#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <cmath>
#include <stdexcept>

namespace hsub {

/// Exact dyadic rational num / 2^exp, kept normalized (num odd or zero).
/// Used as the coefficient ring for the exact-arithmetic algebra checks;
/// all Witt-basis constructions stay inside this ring.
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;

  Dyadic() = default;
  Dyadic(std::int64_t n) : num(n), exp(0) { normalize(); }
  Dyadic(std::int64_t n, int e) : num(n), exp(e) { normalize(); }

  void normalize() {
    if (num == 0) { exp = 0; return; }
    while ((num & 1) == 0 && exp > 0) { num >>= 1; --exp; }
    while (exp < 0) { mul_guard(num, 2); num *= 2; ++exp; }
  }

  static void mul_guard(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return;
    if (std::abs(a) > (std::int64_t(1) << 62) / std::abs(b))
      throw std::overflow_error("dyadic overflow");
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = std::max(a.exp, b.exp);
    std::int64_t an = a.num << (e - a.exp);
    std::int64_t bn = b.num << (e - b.exp);
    return Dyadic(an + bn, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + Dyadic(-b.num, b.exp); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    mul_guard(a.num, b.num);
    return Dyadic(a.num * b.num, a.exp + b.exp);
  }
  Dyadic operator-() const { return Dyadic(-num, exp); }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.num == b.num && a.exp == b.exp; }

  double to_double() const { return std::ldexp(double(num), -exp); }
  bool is_zero() const { return num == 0; }
};

/// Gaussian dyadic rational re + i*im; exact complex scalar.
struct GaussianDyadic {
  Dyadic re, im;

  GaussianDyadic() = default;
  GaussianDyadic(std::int64_t r) : re(r), im(0) {}
  GaussianDyadic(Dyadic r, Dyadic i) : re(r), im(i) {}

  static GaussianDyadic unit_i() { return GaussianDyadic(Dyadic(0), Dyadic(1)); }
  static GaussianDyadic half() { return GaussianDyadic(Dyadic(1, 1), Dyadic(0)); }

  friend GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianDyadic operator-(const GaussianDyadic& a, const GaussianDyadic& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianDyadic operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianDyadic& a, const GaussianDyadic& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Scalar ring hooks used by the generic multivector code.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
  using S = std::complex<double>;
  static S zero() { return {0.0, 0.0}; }
  static S one() { return {1.0, 0.0}; }
  static S unit_i() { return {0.0, 1.0}; }
  static S conj(const S& x) { return std::conj(x); }
  static double abs2(const S& x) { return std::norm(x); }
  static bool exactly_zero(const S& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static constexpr bool exact = false;
};

template <>
struct scalar_traits<GaussianDyadic> {
  using S = GaussianDyadic;
  static S zero() { return S(); }
  static S one() { return S(1); }
  static S unit_i() { return S::unit_i(); }
  static S conj(const S& x) { return {x.re, -x.im}; }
  static double abs2(const S& x) {
    double r = x.re.to_double(), i = x.im.to_double();
    return r * r + i * i;
  }
  static bool exactly_zero(const S& x) { return x.is_zero(); }
  static constexpr bool exact = true;
};

}  // namespace hsub
