#pragma once

#include <string>
#include <utility>

#include "p3asym/rational.hpp"
#include "p3asym/real.hpp"

namespace p3asym {

/// Complex number over Real. Principal branches everywhere: log has its cut
/// on the negative real axis, fractional powers go through exp(p*log z).
struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = Real::kDefaultPrec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex of(long x, mpfr_prec_t prec = Real::kDefaultPrec) {
    return Complex(Real::of(x, prec), Real::of(0L, prec));
  }
  static Complex of(const Rational& q, mpfr_prec_t prec = Real::kDefaultPrec) {
    return Complex(Real::of(q, prec), Real::of(0L, prec));
  }
  static Complex of(double r, double i, mpfr_prec_t prec = Real::kDefaultPrec) {
    return Complex(Real::of(r, prec), Real::of(i, prec));
  }
  static Complex of(const Real& r) { return Complex(r, Real::of(0L, r.prec())); }
  /// r * e^(i*theta).
  static Complex polar(const Real& r, const Real& theta);

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex conj() const { return Complex(re, -im); }
  Real abs() const { return hypot(re, im); }
  Real norm() const { return re * re + im * im; }
  Real arg() const { return atan2(im, re); }

  Complex operator-() const { return Complex(-re, -im); }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return Complex(s * a.re, s * a.im);
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
  Complex& operator/=(const Complex& b) { return *this = *this / b; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string str(int digits = 0) const {
    return "(" + re.str(digits) + ", " + im.str(digits) + ")";
  }
};

Complex exp(const Complex& z);
/// Principal logarithm; z must be nonzero.
Complex log(const Complex& z);
/// Integer power by repeated squaring (e may be negative).
Complex pow(const Complex& z, long e);
/// Principal fractional power exp(p * Log z); z must be nonzero unless p > 0.
Complex pow(const Complex& z, const Real& p);
Complex inverse(const Complex& z);

}  // namespace p3asym
