#include "p3asym/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace p3asym {

Real Real::of(long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

Real Real::of(double d, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite())
    throw std::invalid_argument("not a real literal: '" + text + "'");
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::factorial(unsigned long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_fac_ui(r.v_, n, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  const int nd = digits > 0
                     ? digits
                     : static_cast<int>(std::ceil(prec() * 0.3010299956639812)) + 2;
  char* s = nullptr;
  // %.*Re gives round-trippable scientific notation at the requested digits.
  if (mpfr_asprintf(&s, "%.*Re", nd - 1, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(Real::join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(Real::join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(Real::join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(Real::join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(Real::join(y, x));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

std::pair<Real, Real> sin_cos(const Real& a) {
  Real s(a.prec()), c(a.prec());
  mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

Real pow(const Real& base, long e) {
  Real r(base.prec());
  mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(Real::join(x, y));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

}  // namespace p3asym
