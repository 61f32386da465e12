#include "maxalg/convert.hpp"

#include <cmath>

namespace maxalg {

std::optional<Rational> exact_exp(const Rational& exponent, const Rational& base) {
  if (sgn(base) <= 0) throw DomainError("base must be positive");
  const mpz_class& num = exponent.get_num();
  const mpz_class& den = exponent.get_den();
  if (!den.fits_ulong_p() || !num.fits_slong_p()) return std::nullopt;
  const long p = num.get_si();
  const unsigned long q = den.get_ui();
  auto r = exact_root(base, q);
  if (!r) return std::nullopt;
  Rational v = pow_rational(*r, static_cast<unsigned long>(p < 0 ? -p : p));
  if (p < 0) v = 1 / v;
  return v;
}

std::optional<Rational> exact_log(const Rational& value, const Rational& base,
                                  unsigned long max_denominator) {
  if (sgn(value) <= 0) throw DomainError("log of a non-positive value");
  if (sgn(base) <= 0 || base == 1) throw DomainError("base must be positive and different from 1");
  if (value == 1) return Rational(0);
  const double target = log_rational(value) / log_rational(base);
  if (!std::isfinite(target)) return std::nullopt;

  // Convergents h/k of the continued fraction of target.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(target));
  mpz_class k_prev = 0, k = 1;
  double rest = target - std::floor(target);
  for (int step = 0; step < 40; ++step) {
    if (k > max_denominator) break;
    Rational candidate(h, k);
    candidate.canonicalize();
    if (auto v = exact_exp(candidate, base); v && *v == value) return candidate;
    if (rest < 1e-12) break;
    const double inv = 1.0 / rest;
    const long a = static_cast<long>(std::floor(inv));
    rest = inv - static_cast<double>(a);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace maxalg
