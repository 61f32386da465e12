#pragma once

// Scalar types of the max-times semiring and their arithmetic traits.
//
// Every algorithm in the library is a template over a scalar type S and reaches
// S only through Num<S>. Four instantiations are provided:
//
//   Rational          exact max-times (GMP rationals)
//   double            float max-times, comparisons within a relative tolerance
//   MaxPlus<Rational> exact values stored additively (exponents); closed under
//                     cycle means, so roots never leave the representation
//   MaxPlus<double>   float values stored additively
//
// Semantics are always max-times: for MaxPlus, mul adds exponents, the zero is
// -inf and the unit is 0.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "maxalg/error.hpp"

namespace maxalg {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

// Parses "p/q", a decimal ("0.25", "-1.5e-3") or an integer into an exact
// rational. Throws DomainError on malformed input.
Rational parse_rational(std::string_view token);

// Canonical "p/q" form ("p" for integers).
std::string to_string(const Rational& value);

// Shortest round-trip decimal form.
std::string to_string(double value);

// Exact l-th root of a nonnegative rational, when one exists.
std::optional<Rational> exact_root(const Rational& value, unsigned long l);

// Natural logarithm of a positive rational without overflowing through double.
double log_rational(const Rational& value);

Rational pow_rational(const Rational& value, unsigned long k);

// Value of the form base^exponent with the semiring zero at exponent -inf.
template <class E>
class MaxPlus {
 public:
  MaxPlus() = default;
  explicit MaxPlus(E exponent) : exponent_(std::move(exponent)), finite_(true) {}

  bool finite() const { return finite_; }
  const E& exponent() const { return exponent_; }

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.exponent_ == b.exponent_;
  }

 private:
  E exponent_{};
  bool finite_ = false;
};

namespace detail {

inline double scale_of(double a, double b) {
  return std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool float_eq(double a, double b, double tol) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  return std::fabs(a - b) <= tol * scale_of(a, b);
}

inline bool float_le(double a, double b, double tol) {
  if (a <= b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  return a - b <= tol * scale_of(a, b);
}

}  // namespace detail

template <class S>
struct Num;

template <>
struct Num<Rational> {
  static constexpr bool exact = true;
  static constexpr bool additive = false;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }

  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational div(const Rational& a, const Rational& b) { return a / b; }
  static bool raw_less(const Rational& a, const Rational& b) { return a < b; }
  static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

  static bool eq(const Rational& a, const Rational& b, double) { return a == b; }
  static bool le(const Rational& a, const Rational& b, double) { return a <= b; }
  static bool lt(const Rational& a, const Rational& b, double) { return a < b; }

  static Rational pow(const Rational& a, unsigned long k) { return pow_rational(a, k); }
  static std::optional<Rational> root(const Rational& a, unsigned long l) {
    return exact_root(a, l);
  }
  // Sign of w1^(1/l1) - w2^(1/l2), via cross powers.
  static int root_cmp(const Rational& w1, unsigned long l1, const Rational& w2, unsigned long l2) {
    return cmp(pow(w1, l2), pow(w2, l1));
  }
  static double log(const Rational& a) {
    return is_zero(a) ? -INFINITY : log_rational(a);
  }
  static Rational from_double(double v) { return Rational(v); }
  static double to_double(const Rational& a) { return a.get_d(); }
  static void validate(const Rational& a) {
    if (sgn(a) < 0) throw DomainError("negative entry " + to_string(a) + " in max-times data");
  }
  static std::string str(const Rational& a) { return to_string(a); }
};

template <>
struct Num<double> {
  static constexpr bool exact = false;
  static constexpr bool additive = false;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double a) { return a == 0.0; }

  static double mul(double a, double b) { return a * b; }
  static double div(double a, double b) { return a / b; }
  static bool raw_less(double a, double b) { return a < b; }
  static double max(double a, double b) { return a < b ? b : a; }

  static bool eq(double a, double b, double tol) { return detail::float_eq(a, b, tol); }
  static bool le(double a, double b, double tol) { return detail::float_le(a, b, tol); }
  static bool lt(double a, double b, double tol) { return !detail::float_le(b, a, tol); }

  static double pow(double a, unsigned long k) { return std::pow(a, static_cast<double>(k)); }
  static std::optional<double> root(double a, unsigned long l) {
    return std::pow(a, 1.0 / static_cast<double>(l));
  }
  static int root_cmp(double w1, unsigned long l1, double w2, unsigned long l2) {
    const double a = std::log(w1) / static_cast<double>(l1);
    const double b = std::log(w2) / static_cast<double>(l2);
    return a < b ? -1 : (b < a ? 1 : 0);
  }
  static double log(double a) { return std::log(a); }
  static double from_double(double v) { return v; }
  static double to_double(double a) { return a; }
  static void validate(double a) {
    if (std::isnan(a)) throw DomainError("NaN entry");
    if (a < 0) throw DomainError("negative entry " + to_string(a) + " in max-times data");
    if (std::isinf(a)) throw DomainError("infinite entry in max-times data");
  }
  static std::string str(double a) { return to_string(a); }
};

template <class E>
struct Num<MaxPlus<E>> {
  using S = MaxPlus<E>;
  using ENum = Num<E>;
  static constexpr bool exact = ENum::exact;
  static constexpr bool additive = true;

  static S zero() { return S(); }
  static S one() { return S(E(0)); }
  static bool is_zero(const S& a) { return !a.finite(); }

  static S mul(const S& a, const S& b) {
    if (!a.finite() || !b.finite()) return S();
    return S(E(a.exponent() + b.exponent()));
  }
  static S div(const S& a, const S& b) {
    if (!a.finite()) return S();
    return S(E(a.exponent() - b.exponent()));
  }
  static bool raw_less(const S& a, const S& b) {
    if (!b.finite()) return false;
    if (!a.finite()) return true;
    return a.exponent() < b.exponent();
  }
  static S max(const S& a, const S& b) { return raw_less(a, b) ? b : a; }

  static bool eq(const S& a, const S& b, double tol) {
    if (a.finite() != b.finite()) return false;
    if (!a.finite()) return true;
    if constexpr (exact) {
      return a.exponent() == b.exponent();
    } else {
      return detail::float_eq(a.exponent(), b.exponent(), tol);
    }
  }
  static bool le(const S& a, const S& b, double tol) {
    if (!a.finite()) return true;
    if (!b.finite()) return false;
    if constexpr (exact) {
      return a.exponent() <= b.exponent();
    } else {
      return detail::float_le(a.exponent(), b.exponent(), tol);
    }
  }
  static bool lt(const S& a, const S& b, double tol) { return !le(b, a, tol); }

  static S pow(const S& a, unsigned long k) {
    if (k == 0) return one();
    if (!a.finite()) return S();
    return S(E(a.exponent() * E(k)));
  }
  static std::optional<S> root(const S& a, unsigned long l) {
    if (!a.finite()) return S();
    return S(E(a.exponent() / E(l)));
  }
  static int root_cmp(const S& w1, unsigned long l1, const S& w2, unsigned long l2) {
    const S a = pow(w1, l2);
    const S b = pow(w2, l1);
    return raw_less(a, b) ? -1 : (raw_less(b, a) ? 1 : 0);
  }
  // Exponent read as a natural logarithm; the base is immaterial for every
  // ratio of logarithms the library computes.
  static double log(const S& a) { return a.finite() ? ENum::to_double(a.exponent()) : -INFINITY; }
  static S from_double(double v) { return v == 0 ? S() : S(ENum::from_double(std::log(v))); }
  static double to_double(const S& a) { return a.finite() ? std::exp(ENum::to_double(a.exponent())) : 0.0; }
  static void validate(const S& a) {
    if (a.finite()) {
      if constexpr (!exact) {
        if (std::isnan(a.exponent())) throw DomainError("NaN entry");
        if (std::isinf(a.exponent())) throw DomainError("infinite exponent; use -inf token for zero");
      }
    }
  }
  static std::string str(const S& a) { return a.finite() ? ENum::str(a.exponent()) : "-inf"; }
};

using ExactMaxPlus = MaxPlus<Rational>;
using FloatMaxPlus = MaxPlus<double>;

}  // namespace maxalg
