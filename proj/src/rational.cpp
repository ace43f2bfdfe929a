#include "p3asym/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace p3asym {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw std::invalid_argument("not a rational literal: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (!is_integer_token(digits.empty() ? "0" : digits) || frac_len == 0)
      throw std::invalid_argument("not a decimal literal: '" + text + "'");
    Integer n(digits);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (!is_integer_token(text))
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  return Rational(Integer(text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational pow_rational(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_cbrt(const Rational& q) {
  if (q == 0) return Rational(0);
  Integer num = q.get_num();
  Integer den = q.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  Integer rn, rd;
  const int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3);
  const int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3);
  if (!exact_n || !exact_d) return std::nullopt;
  if (neg) rn = -rn;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

double log_abs(const Rational& q) {
  if (q == 0) throw std::domain_error("log_abs of zero");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  constexpr double ln2 = 0.6931471805599453094;
  return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
         static_cast<double>(en - ed) * ln2;
}

}  // namespace p3asym
