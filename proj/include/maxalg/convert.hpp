#pragma once

// The max-times <-> max-plus isomorphism: a -> log_base(a), 0 -> -inf.

#include <cmath>
#include <optional>

#include "maxalg/matrix.hpp"

namespace maxalg {

// Rational exponent q with base^q == value, if one exists with a denominator up
// to max_denominator. Candidates come from a continued-fraction expansion of
// the float logarithm ratio and are confirmed in exact arithmetic.
std::optional<Rational> exact_log(const Rational& value, const Rational& base,
                                  unsigned long max_denominator = 64);

// base^q, when it is rational.
std::optional<Rational> exact_exp(const Rational& exponent, const Rational& base);

// Float conversion, natural base.
inline Matrix<FloatMaxPlus> to_max_plus(const Matrix<double>& a) {
  Matrix<FloatMaxPlus> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) out(i, j) = FloatMaxPlus(std::log(a(i, j)));
    }
  }
  return out;
}

inline Matrix<double> to_max_times(const Matrix<FloatMaxPlus>& a) {
  Matrix<double> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).finite()) out(i, j) = std::exp(a(i, j).exponent());
    }
  }
  return out;
}

// Exact conversion in the given base. Throws ExactnessError when an entry is
// not a rational power of the base; float mode handles such data.
inline Matrix<ExactMaxPlus> to_max_plus(const Matrix<Rational>& a, const Rational& base) {
  Matrix<ExactMaxPlus> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      auto q = exact_log(a(i, j), base);
      if (!q) {
        throw ExactnessError("log base " + to_string(base) + " of " + to_string(a(i, j)) +
                             " is irrational; use float mode");
      }
      out(i, j) = ExactMaxPlus(*q);
    }
  }
  return out;
}

inline Matrix<Rational> to_max_times(const Matrix<ExactMaxPlus>& a, const Rational& base) {
  Matrix<Rational> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).finite()) continue;
      auto v = exact_exp(a(i, j).exponent(), base);
      if (!v) {
        throw ExactnessError(to_string(base) + "^" + to_string(a(i, j).exponent()) +
                             " is irrational; use float mode");
      }
      out(i, j) = *v;
    }
  }
  return out;
}

}  // namespace maxalg
