#pragma once

// Seeded random matrices for property tests.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "maxalg/matrix.hpp"

namespace gen {

using maxalg::ExactMaxPlus;
using maxalg::Matrix;
using maxalg::Rational;

using Rng = std::mt19937_64;

inline const std::vector<Rational>& palette() {
  static const std::vector<Rational> values = {
      Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(1),
      Rational(4, 3), Rational(3, 2), Rational(2),    Rational(3),    Rational(4)};
  return values;
}

// Entries at most 1, so every cycle weighs at most 1.
inline const std::vector<Rational>& sub_unit_palette() {
  static const std::vector<Rational> values = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                               Rational(2, 3), Rational(3, 4), Rational(1)};
  return values;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Rational pick(Rng& rng, const std::vector<Rational>& values) {
  return values[uniform(rng, 0, values.size() - 1)];
}

inline Matrix<Rational> random_matrix(Rng& rng, std::size_t n, double density,
                                      const std::vector<Rational>& values = palette()) {
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) a(i, j) = pick(rng, values);
  return a;
}

// Random matrix made irreducible by threading a random Hamiltonian cycle.
inline Matrix<Rational> random_irreducible(Rng& rng, std::size_t n, double density,
                                           const std::vector<Rational>& values = palette()) {
  Matrix<Rational> a = random_matrix(rng, n, density, values);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    auto& e = a(perm[k], perm[(k + 1) % n]);
    if (sgn(e) == 0) e = pick(rng, values);
  }
  return a;
}

inline std::vector<Rational> random_positive(Rng& rng, std::size_t n) {
  std::vector<Rational> x(n);
  for (auto& v : x) v = pick(rng, palette());
  return x;
}

// Random positive diagonal similarity X^-1 A X.
inline Matrix<Rational> random_similarity(Rng& rng, const Matrix<Rational>& a) {
  std::vector<Rational> x(a.n());
  for (auto& v : x) v = pick(rng, palette());
  Matrix<Rational> b = a;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) b(i, j) = a(i, j) * x[j] / x[i];
  return b;
}

// Irreducible matrix with maximum cycle mean exactly 1: entries at most 1, a
// random cycle forced to weight 1, then hidden behind a random similarity.
inline Matrix<Rational> random_unit_lambda(Rng& rng, std::size_t n, double density, bool hide = true) {
  Matrix<Rational> a = random_irreducible(rng, n, density, sub_unit_palette());
  const std::size_t len = uniform(rng, 1, n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < len; ++k) a(perm[k], perm[(k + 1) % len]) = 1;
  return hide ? random_similarity(rng, a) : a;
}

// Exact max-plus matrix with small integer exponents (density of finite entries).
inline Matrix<ExactMaxPlus> random_maxplus_irreducible(Rng& rng, std::size_t n, double density,
                                                       long lo = -4, long hi = 4) {
  Matrix<ExactMaxPlus> a(n, n);
  auto draw = [&] {
    return ExactMaxPlus(Rational(std::uniform_int_distribution<long>(lo, hi)(rng)));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) a(i, j) = draw();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    auto& e = a(perm[k], perm[(k + 1) % n]);
    if (!e.finite()) e = draw();
  }
  return a;
}

}  // namespace gen
