#include <doctest.h>

#include "maxalg/balancing.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace maxalg;
using Q = Rational;
using M = Matrix<Rational>;
using P = ExactMaxPlus;
using MP = Matrix<ExactMaxPlus>;

namespace {

M mat(std::initializer_list<std::initializer_list<double>> rows) { return M::from_doubles(rows); }

// Every edge is a minimum-weight edge of some elementary cycle through it.
template <class S>
bool cycle_cover_by_enumeration(const Matrix<S>& b) {
  const auto cycles = oracle::cycles(b);
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (Num<S>::is_zero(b(i, j))) continue;
      bool found = false;
      for (const auto& c : cycles) {
        bool uses = false, minimal = true;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
          if (c[k] == i && c[k + 1] == j) uses = true;
          if (Num<S>::raw_less(b(c[k], c[k + 1]), b(i, j))) minimal = false;
        }
        if (uses && minimal) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

MP similarity(gen::Rng& rng, const MP& a) {
  Vector<P> x(a.n());
  for (auto& v : x) v = P(Q(static_cast<long>(gen::uniform(rng, 0, 8)) - 4, 2));
  return apply_scaling(a, x);
}

}  // namespace

TEST_CASE("max_balance examples") {
  const auto sym = max_balance(mat({{0, 2}, {2, 0}}));
  CHECK(sym.scaling == Vector<Q>{1, 1});
  CHECK(sym.balanced == mat({{0, 2}, {2, 0}}));

  const auto two = max_balance(mat({{0, 4}, {1, 0}}));
  CHECK(two.scaling == Vector<Q>{2, 1});
  CHECK(two.balanced == mat({{0, 2}, {2, 0}}));
  CHECK(two.levels == std::vector<Q>{2});
  CHECK(two.checked == std::vector<BalanceCheck>{BalanceCheck::CycleCover, BalanceCheck::Cut});

  const auto id = max_balance(M::identity(3));
  CHECK(id.scaling == Vector<Q>{1, 1, 1});

  CHECK_THROWS_AS(max_balance(mat({{1, 1}, {0, 1}})), NotIrreducible);
  CHECK_THROWS_AS(max_balance(mat({{0, 2}, {1, 0}})), ExactnessError);

  const auto fl = max_balance(Matrix<double>::from_doubles({{0, 2}, {1, 0}}));
  CHECK(is_max_balanced_cyclecover(fl.balanced));
  CHECK(fl.balanced(0, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("max_balance levels descend through contractions") {
  // The 2-cycle on nodes 1,2 (mean 2) is frozen first, then node 3 joins at mean 1.
  const M a = mat({{5, 4, 0}, {1, 0, 1}, {0, 1, 0}});
  const auto cert = max_balance(a);
  CHECK(cert.levels == std::vector<Q>{2, 1});
  CHECK(cert.balanced == mat({{5, 2, 0}, {2, 0, 1}, {0, 1, 0}}));
  CHECK(is_max_balanced_cyclecover(cert.balanced));
  CHECK(is_max_balanced_cut(cert.balanced));
}

TEST_CASE("is_max_balanced_cyclecover examples") {
  CHECK(is_max_balanced_cyclecover(mat({{0, 2}, {2, 0}})));
  CHECK_FALSE(is_max_balanced_cyclecover(mat({{0, 4}, {1, 0}})));
  CHECK(is_max_balanced_cyclecover(M::identity(4)));
}

TEST_CASE("is_max_balanced_cut examples") {
  CHECK(is_max_balanced_cut(mat({{0, 2}, {2, 0}})));
  CHECK_FALSE(is_max_balanced_cut(mat({{0, 4}, {1, 0}})));
  CHECK(is_max_balanced_cut(mat({{7}})));
  CHECK_THROWS_AS(is_max_balanced_cut(M::identity(15)), SizeLimit);
  CHECK_THROWS_AS(is_max_balanced_cut(mat({{1, 1}, {0, 1}})), NotIrreducible);
}

TEST_CASE("max_balance output is balanced and similarity invariant") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const MP a = gen::random_maxplus_irreducible(rng, n, 0.35);
    const auto cert = max_balance(a);
    CHECK(cert.balanced == apply_scaling(a, cert.scaling));
    CHECK(is_max_balanced_cyclecover(cert.balanced));
    CHECK(is_max_balanced_cut(cert.balanced));
    if (n <= 6) CHECK(cycle_cover_by_enumeration(cert.balanced));
    for (std::size_t k = 1; k < cert.levels.size(); ++k) CHECK(Num<P>::le(cert.levels[k], cert.levels[k - 1], 0));
    CHECK(max_balance(similarity(rng, a)).balanced == cert.balanced);
  }
}

TEST_CASE("cycle-cover and cut characterizations agree") {
  gen::Rng rng(42);
  int balanced = 0, unbalanced = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    MP b = gen::random_maxplus_irreducible(rng, n, 0.35, -2, 2);
    const int kind = trial % 3;
    if (kind > 0) b = max_balance(b).balanced;
    if (kind == 2) {
      // Nudge one entry of a balanced matrix.
      const std::size_t i = gen::uniform(rng, 0, n - 1), j = gen::uniform(rng, 0, n - 1);
      if (b(i, j).finite()) b(i, j) = P(b(i, j).exponent() + Q(gen::coin(rng, 0.5) ? 1 : -1, 2));
    }
    const bool cover = is_max_balanced_cyclecover(b);
    CHECK(cover == is_max_balanced_cut(b));
    if (n <= 6) CHECK(cover == cycle_cover_by_enumeration(b));
    (cover ? balanced : unbalanced)++;
  }
  CHECK(balanced > 100);
  CHECK(unbalanced > 100);
}
