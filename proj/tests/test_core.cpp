#include <doctest.h>

#include "maxalg/convert.hpp"
#include "maxalg/matrix.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace maxalg;
using Q = Rational;
using M = Matrix<Rational>;

namespace {

M mat(std::initializer_list<std::initializer_list<double>> rows) { return M::from_doubles(rows); }

}  // namespace

TEST_CASE("oplus is the entrywise maximum") {
  CHECK(oplus(mat({{1, 2}, {3, 4}}), mat({{4, 3}, {2, 1}})) == mat({{4, 3}, {3, 4}}));
  const M a = mat({{1, 0.5}, {0, 2}});
  CHECK(oplus(a, M::zero(2)) == a);
  CHECK(oplus(a, a) == a);
  CHECK_THROWS_AS(oplus(a, M::zero(3)), DimensionMismatch);
  CHECK_THROWS_AS(oplus(a, M(2, 2, 1e-3)), ModeMismatch);
}

TEST_CASE("otimes examples") {
  const M a = mat({{1, 0.5}, {0.25, 3}});
  CHECK(otimes(M::identity(2), a) == a);
  CHECK(otimes(mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})) == mat({{1, 0}, {0, 0}}));
  CHECK(otimes(mat({{1, 1}, {1, 0}}), mat({{1, 1}, {1, 0}})) == mat({{1, 1}, {1, 1}}));
}

TEST_CASE("mat_power examples") {
  const M a = mat({{1, 1}, {1, 0}});
  CHECK(mat_power(a, 1) == a);
  CHECK(mat_power(mat({{0, 1}, {1, 0}}), 2) == M::identity(2));
  CHECK(mat_power(a, 3) == mat({{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(mat_power(a, 0), DomainError);
}

TEST_CASE("mat_power agrees with the path dynamic program") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 5);
    const M a = gen::random_matrix(rng, n, 0.5);
    for (std::size_t t = 1; t <= 12; ++t) {
      REQUIRE(mat_power(a, t) == oracle::power_dp(a, t));
    }
  }
}

TEST_CASE("semiring laws hold exactly") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const M a = gen::random_matrix(rng, n, 0.6);
    const M b = gen::random_matrix(rng, n, 0.6);
    const M c = gen::random_matrix(rng, n, 0.6);
    REQUIRE(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)));
    REQUIRE(otimes(oplus(a, b), c) == oplus(otimes(a, c), otimes(b, c)));
    REQUIRE(oplus(a, a) == a);
  }
}

TEST_CASE("kleene_star examples") {
  CHECK(kleene_star(M::zero(3)).value() == M::identity(3));
  CHECK(kleene_star(mat({{0, 0.5}, {0.5, 0}})).value() == mat({{1, 0.5}, {0.5, 1}}));
  const auto divergent = kleene_star(mat({{2}}));
  REQUIRE_FALSE(divergent.ok());
  CHECK(divergent.obstruction().cycle == Path{{0, 0}});
  CHECK(divergent.obstruction().weight == 2);
}

TEST_CASE("kleene_star properties and divergence decision") {
  gen::Rng rng(5);
  int convergent = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const M a = gen::random_matrix(rng, n, gen::coin(rng, 0.5) ? 0.3 : 0.6);
    const auto star = kleene_star(a);
    const bool heavy = oracle::max_mean_vs_one(a) > 0;
    REQUIRE(star.ok() == !heavy);
    if (star.ok()) {
      ++convergent;
      const M& k = star.value();
      REQUIRE(otimes(k, k) == k);
      REQUIRE(leq(M::identity(n), k));
      REQUIRE(leq(a, k));
      REQUIRE(k == oracle::star_by_paths(a));
      M sum = M::identity(n);
      for (std::size_t t = 1; t < n; ++t) sum = oplus(sum, mat_power(a, t));
      REQUIRE(k == sum);
    } else {
      const auto& ob = star.obstruction();
      REQUIRE(ob.cycle.closed());
      REQUIRE(ob.weight == path_weight(a, ob.cycle));
      REQUIRE(ob.weight > 1);
    }
  }
  CHECK(convergent > 50);
}

TEST_CASE("float kleene_star tolerates rounding on weight-one cycles") {
  const Matrix<double> a = Matrix<double>::from_doubles({{0, 3}, {1.0 / 3.0, 0}});
  const auto star = kleene_star(a);
  REQUIRE(star.ok());
  CHECK(star.value()(0, 1) == doctest::Approx(3));
}

TEST_CASE("entrywise_div") {
  const M b = mat({{1, 2}, {4, 0.5}});
  CHECK(entrywise_div(b, b) == mat({{1, 1}, {1, 1}}));
  CHECK(entrywise_div(mat({{0, 2}, {2, 0}}), mat({{0, 4}, {4, 0}})) == mat({{0, 0.5}, {0.5, 0}}));
  try {
    entrywise_div(mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}}));
    FAIL("expected UndefinedDivision");
  } catch (const UndefinedDivision& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("left_residual") {
  const M w = mat({{1, 0.5}, {2, 3}});
  CHECK(left_residual(M::identity(2), w) == w);
  CHECK(left_residual(mat({{1, 1}, {1, 1}}), mat({{1, 1}, {1, 1}})) == mat({{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(left_residual(mat({{1, 0}, {1, 0}}), w), NoConstraint);

  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 4);
    M v = gen::random_matrix(rng, n, 0.6);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = gen::pick(rng, gen::palette());
    const M y = gen::random_matrix(rng, n, 0.6);
    const M vy = otimes(v, y);
    const M x = left_residual(v, vy);
    REQUIRE(leq(y, x));
    REQUIRE(leq(otimes(v, x), vy));
    // Greatest: raising any entry breaks V (x) X <= W.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        M bumped = x;
        bumped(i, j) = sgn(x(i, j)) == 0 ? Q(1, 1000) : Q(x(i, j) * Q(1001, 1000));
        REQUIRE_FALSE(leq(otimes(v, bumped), vy));
      }
    }
  }
}

TEST_CASE("semiring_convert") {
  const auto z = to_max_plus(M::zero(2), Q(2));
  CHECK_FALSE(z(0, 0).finite());
  CHECK_FALSE(z(1, 1).finite());

  const M a = mat({{1, 2}, {0.5, 1}});
  const auto e = to_max_plus(a, Q(2));
  CHECK(e(0, 0) == ExactMaxPlus(Q(0)));
  CHECK(e(0, 1) == ExactMaxPlus(Q(1)));
  CHECK(e(1, 0) == ExactMaxPlus(Q(-1)));
  CHECK(to_max_times(e, Q(2)) == a);

  const auto f = to_max_plus(Matrix<double>::from_doubles({{1, 2}, {0.5, 1}}));
  CHECK(f(0, 1).exponent() == doctest::Approx(std::log(2.0)));
  CHECK(f(1, 0).exponent() == doctest::Approx(-std::log(2.0)));
  CHECK(approx_equal(to_max_times(f), Matrix<double>::from_doubles({{1, 2}, {0.5, 1}})));

  CHECK_THROWS_AS(to_max_plus(mat({{3}}), Q(2)), ExactnessError);
  // Fractional exponents round-trip exactly: 8^(2/3) = 4.
  CHECK(to_max_plus(mat({{4}}), Q(8))(0, 0) == ExactMaxPlus(Q(2, 3)));
  CHECK(to_max_times(to_max_plus(mat({{4, 0.125}}), Q(8)), Q(8)) == mat({{4, 0.125}}));
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("1/4") == Q(1, 4));
  CHECK(parse_rational("0.25") == Q(1, 4));
  CHECK(parse_rational("-1.5e-1") == Q(-3, 20));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("6/8") == Q(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("."), DomainError);
  CHECK(to_string(Q(1, 4)) == "1/4");
  CHECK(to_string(Q(2)) == "2");
  CHECK(exact_root(Q(4, 9), 2) == Q(2, 3));
  CHECK_FALSE(exact_root(Q(2), 2).has_value());
}
