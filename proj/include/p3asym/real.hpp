#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "p3asym/rational.hpp"

namespace p3asym {

/// Arbitrary-precision binary float, a thin RAII wrapper over mpfr_t.
///
/// Every value carries its own precision in bits. Binary operations round
/// to the larger of the two operand precisions (MPFR_RNDN throughout), so
/// precision is decided where inputs are created and then propagates.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;

  explicit Real(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long n, mpfr_prec_t prec = kDefaultPrec);
  static Real of(double d, mpfr_prec_t prec = kDefaultPrec);
  static Real of(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
  /// Parse a decimal string, rounding once to `prec` bits.
  static Real parse(const std::string& text, mpfr_prec_t prec = kDefaultPrec);
  static Real pi(mpfr_prec_t prec = kDefaultPrec);
  static Real factorial(unsigned long n, mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific-notation string with enough digits for the full precision
  /// (or `digits` significant digits when given).
  std::string str(int digits = 0) const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real atan2(const Real& y, const Real& x);
  friend std::pair<Real, Real> sin_cos(const Real& a);
  friend Real pow(const Real& base, long e);
  friend Real hypot(const Real& x, const Real& y);
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

}  // namespace p3asym
