#include <doctest.h>

#include "maxalg/asymptotics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace maxalg;
using Q = Rational;
using M = Matrix<Rational>;
using P = ExactMaxPlus;

namespace {

M mat(std::initializer_list<std::initializer_list<double>> rows) { return M::from_doubles(rows); }

M all_ones(std::size_t n) {
  M m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

// Heaviest length-t walk i -> j visiting a critical node, by enumerating all
// walks (tiny t only).
Q strong_walks(const M& a, const std::vector<bool>& critical, std::size_t i, std::size_t j, std::size_t t) {
  Q best = 0;
  std::vector<std::size_t> walk{i};
  auto rec = [&](auto&& self, const Q& w, bool seen) -> void {
    if (walk.size() == t + 1) {
      if (walk.back() == j && seen && w > best) best = w;
      return;
    }
    for (std::size_t v = 0; v < a.n(); ++v) {
      if (a(walk.back(), v) == 0) continue;
      walk.push_back(v);
      self(self, w * a(walk[walk.size() - 2], v), seen || critical[v]);
      walk.pop_back();
    }
  };
  rec(rec, Q(1), critical[i]);
  return best;
}

}  // namespace

TEST_CASE("critical_matrix examples") {
  CHECK(critical_matrix(M::identity(3)) == M::identity(3));
  CHECK(critical_matrix(mat({{1, 0.5}, {0.5, 1}})) == M::identity(2));
  CHECK(critical_matrix(mat({{0, 1}, {1, 0}})) == mat({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(critical_matrix(mat({{0, 1}, {0, 0}})), AcyclicMatrix);
}

TEST_CASE("transient_and_period examples") {
  const auto swap = transient_and_period(mat({{0, 1}, {1, 0}}));
  CHECK(swap.transient == 1);
  CHECK(swap.period == 2);
  CHECK(swap.predicted_period == 2);
  REQUIRE(swap.powers.size() == 3);
  CHECK(swap.powers[1] == M::identity(2));

  const auto loop = transient_and_period(mat({{1, 1}, {1, 0}}));
  CHECK(loop.transient == 2);
  CHECK(loop.period == 1);
  CHECK(loop.powers.front() == all_ones(2));

  const auto id = transient_and_period(M::identity(3));
  CHECK(id.transient == 1);
  CHECK(id.period == 1);

  CHECK_THROWS_AS(transient_and_period(mat({{0, 4}, {1, 0}})), NotNormalized);
  CHECK_THROWS_AS(transient_and_period(mat({{1, 1}, {0, 1}})), NotIrreducible);
  CHECK_THROWS_AS(transient_and_period(mat({{1, 0}, {0, 0.5}})), NotIrreducible);
  // The loop 99/100 at node 2 beats the detour through the critical loop
  // (weight 1/100) for hundreds of steps.
  M slow = mat({{1, 0.1}, {0.1, 0}});
  slow(1, 1) = Q(99, 100);
  CHECK_THROWS_AS(transient_and_period(slow, 100), BudgetExceeded);
  CHECK(transient_and_period(slow, 1000).transient > 100);

  const auto fl = transient_and_period(Matrix<double>::from_doubles({{1, 1}, {1, 0}}));
  CHECK(fl.transient == 2);
}

TEST_CASE("normalize_to_unit examples") {
  const M unit = mat({{0, 2}, {0.5, 0}});
  CHECK(normalize_to_unit(unit).first == unit);
  const auto [b, mean] = normalize_to_unit(mat({{0, 4}, {1, 0}}));
  CHECK(b == mat({{0, 2}, {0.5, 0}}));
  CHECK(lambda_value(mean) == 2);
  const auto [c, m3] = normalize_to_unit(mat({{3}}));
  CHECK(c == mat({{1}}));
  CHECK(lambda_value(m3) == 3);
}

TEST_CASE("csr_decompose examples") {
  const M swap = mat({{0, 1}, {1, 0}});
  const auto t = csr_decompose(swap);
  CHECK(t.gamma == 2);
  CHECK(t.c == M::identity(2));
  CHECK(t.r == M::identity(2));
  CHECK(t.s == swap);
  for (std::size_t k = 1; k <= 7; ++k) CHECK(csr_power(t, k) == mat_power(swap, k));
  CHECK(csr_power(t, 5) == swap);

  const auto id = csr_decompose(M::identity(3));
  CHECK(id.gamma == 1);
  CHECK(id.c == M::identity(3));
  CHECK(id.s == M::identity(3));
  CHECK(id.r == M::identity(3));

  const M loop = mat({{1, 1}, {1, 0}});
  const auto l = csr_decompose(loop);
  CHECK(l.gamma == 1);
  // The 2-cycle 1->2->1 also weighs 1, so both nodes are critical.
  CHECK(l.critical_nodes == std::vector<std::size_t>{0, 1});
  CHECK(l.c == all_ones(2));
  CHECK(l.r == all_ones(2));
  CHECK(l.transient == 2);
  CHECK(l.csr_onset == 2);
  for (std::size_t k = 2; k <= 6; ++k) CHECK(csr_power(l, k) == all_ones(2));
  CHECK(csr_power(l, 1) != loop);

  const M scaled = mat({{0, 4}, {1, 0}});
  const auto s = csr_decompose(scaled);
  CHECK(s.lambda == 2);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(csr_power(s, k) == mat_power(scaled, k));
  CHECK_THROWS_AS(csr_power(s, 0), PreconditionError);
  CHECK_THROWS_AS(csr_decompose(mat({{1, 1}, {0, 1}})), NotIrreducible);
}

TEST_CASE("strong_path_weight examples") {
  CHECK(strong_path_weight(mat({{1, 0.5}, {0.5, 0.5}}), 0, 0, 1) == 1);
  CHECK(strong_path_weight(mat({{0, 1}, {1, 0}}), 0, 1, 2) == 0);
  CHECK(strong_path_weight(mat({{1, 1}, {1, 0}}), 1, 1, 2) == 1);
  CHECK(strong_path_weight(mat({{0, 1}, {0, 0}}), 0, 1, 1) == 0);
}

TEST_CASE("nachtigall_expansion examples") {
  const M d = mat({{1, 0}, {0, 0.5}});
  const auto e = nachtigall_expansion(d);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].lambda == 1);
  CHECK(e.terms[0].support == std::vector<std::size_t>{0});
  CHECK(e.terms[1].lambda == Q(1, 2));
  CHECK(e.terms[1].support == std::vector<std::size_t>{1});
  CHECK(e.validity_start == std::optional<std::size_t>{1});
  CHECK(expansion_power(e, 3) == mat({{1, 0}, {0, 0.125}}));

  const M cyc = mat({{0, 2, 0}, {0, 0, 1}, {0.5, 0, 0}});
  const auto one = nachtigall_expansion(cyc);
  REQUIRE(one.terms.size() == 1);
  const auto csr = csr_decompose(cyc);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(expansion_power(one, k) == csr_power(csr, k));

  const auto two = nachtigall_expansion(mat({{1, 0.5}, {0.5, 0.25}}));
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0].lambda == 1);
  CHECK(two.terms[0].support == std::vector<std::size_t>{0});
  CHECK(two.terms[1].lambda == Q(1, 4));
  CHECK(two.terms[1].support == std::vector<std::size_t>{1});
  REQUIRE(two.validity_start);
  CHECK(expansion_power(two, *two.validity_start) == mat_power(mat({{1, 0.5}, {0.5, 0.25}}), *two.validity_start));
}

TEST_CASE("transient_bound examples") {
  const auto b = transient_bound(mat({{1, 0}, {0, 0.5}}));
  REQUIRE(b);
  CHECK(*b == doctest::Approx(8));
  CHECK_FALSE(transient_bound(mat({{2, 2}, {2, 2}})));
  CHECK_FALSE(transient_bound(mat({{0, 1}, {1, 0}})));
}

TEST_CASE("cyclicity theorem and CSR theorem on random unit-lambda matrices") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const M a = gen::random_unit_lambda(rng, n, 0.4);
    const auto prof = transient_and_period(a, 5000);
    CHECK(prof.period == prof.predicted_period);
    CHECK(prof.period == critical_graph(a).cyclicity);
    const std::size_t T = prof.transient, g = prof.period;
    for (std::size_t t = T; t <= T + 3 * g; ++t) CHECK(oracle::power_dp(a, t + g) == oracle::power_dp(a, t));
    if (T >= 2) CHECK(oracle::power_dp(a, T - 1 + g) != oracle::power_dp(a, T - 1));

    const auto csr = csr_decompose(a, 5000);
    CHECK(csr.transient == T);
    CHECK(csr.csr_onset <= T);
    for (std::size_t t = T; t <= T + 3 * g; ++t) CHECK(csr_power(csr, t) == oracle::power_dp(a, t));

    const M ac = critical_matrix(a);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(critical_matrix(mat_power(a, k)) == mat_power(ac, k));
  }
}

TEST_CASE("CSR in max-plus data") {
  gen::Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 5);
    const auto a = gen::random_maxplus_irreducible(rng, n, 0.4);
    const auto csr = csr_decompose(a, 5000);
    for (std::size_t t = csr.transient; t <= csr.transient + 3 * csr.gamma; ++t) {
      CHECK(csr_power(csr, t) == oracle::power_dp(a, t));
    }
  }
}

TEST_CASE("strong path weights match CSR after 3n^2") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 4);
    const M a = gen::random_unit_lambda(rng, n, 0.5);
    const auto csr = csr_decompose(a, 5000);
    const M& v = csr.visualized;
    for (std::size_t t = 3 * n * n; t <= 3 * n * n + 2 * csr.gamma; ++t) {
      const M m = otimes(otimes(csr.c, mat_power(csr.s, t)), csr.r);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(strong_path_weight(v, i, j, t) == m(i, j));
    }
    // The dynamic program against plain walk enumeration at short lengths.
    const std::vector<bool> crit = critical_graph(v).nodes;
    for (std::size_t t = 1; t <= 3; ++t)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(strong_path_weight(v, i, j, t) == strong_walks(v, crit, i, j, t));
  }
}

TEST_CASE("Nachtigall expansions and the transient bound") {
  gen::Rng rng(54);
  int applicable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 5);
    const auto a = gen::random_maxplus_irreducible(rng, n, 0.4);
    const auto e = nachtigall_expansion(a, 400);
    REQUIRE(e.validity_start);
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
      if (k > 0) CHECK(Num<P>::raw_less(e.terms[k].lambda, e.terms[k - 1].lambda));
      for (std::size_t v : e.terms[k].support) {
        CHECK_FALSE(used[v]);
        used[v] = true;
      }
    }
    const std::size_t g1 = e.terms.front().gamma;
    for (std::size_t t = *e.validity_start; t <= *e.validity_start + 2 * g1; ++t) {
      CHECK(expansion_power(e, t) == oracle::power_dp(a, t));
    }
    if (const auto bound = transient_bound(a)) {
      ++applicable;
      const auto csr = csr_decompose(a, 5000);
      CHECK(static_cast<double>(std::max(csr.transient, csr.csr_onset)) <= *bound * (1 + 1e-9));
    }
  }
  CHECK(applicable > 20);
}
