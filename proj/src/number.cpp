#include "maxalg/number.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>

namespace maxalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ten_to(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Rational parse_decimal(std::string_view token) {
  bool negative = false;
  std::string_view s = token;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw DomainError("malformed exponent in '" + std::string(token) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw DomainError("malformed number '" + std::string(token) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw DomainError("malformed number '" + std::string(token) + "'");
    digits = std::string(s);
  }
  Rational value(mpz_class(digits, 10));
  const long shift = exponent - fraction_digits;
  if (shift > 0) {
    value *= ten_to(static_cast<unsigned long>(shift));
  } else if (shift < 0) {
    value /= ten_to(static_cast<unsigned long>(-shift));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

double log_mpz(const mpz_class& z) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  if (token.empty()) throw DomainError("empty numeric token");
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    std::string_view num = token.substr(0, slash);
    const std::string_view den = token.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("malformed fraction '" + std::string(token) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(token) + "'");
    Rational value(mpz_class(std::string(num), 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(token);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::optional<Rational> exact_root(const Rational& value, unsigned long l) {
  if (l == 0) throw DomainError("zeroth root");
  if (sgn(value) < 0) return std::nullopt;
  if (l == 1) return value;
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), l) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), l) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double log_rational(const Rational& value) {
  return log_mpz(value.get_num()) - log_mpz(value.get_den());
}

Rational pow_rational(const Rational& value, unsigned long k) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), k);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace maxalg
