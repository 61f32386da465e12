#pragma once

// Commuting matrices: the commutation test, a common positive eigenvector,
// the Boolean matrices of the two saturation graphs and the cycle theorem for
// commuting digraphs.

#include <cstddef>
#include <utility>
#include <vector>

#include "maxalg/asymptotics.hpp"
#include "maxalg/scaling.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

// A (x) B == B (x) A.
template <class S>
bool commutes(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_square(a, "commutes");
  detail::require_same_shape(a, b, "commutes");
  return approx_equal(otimes(a, b), otimes(b, a));
}

template <class S>
struct CommonEigenvector {
  Vector<S> x;
  S lambda_a;
  S lambda_b;
};

namespace detail {

template <class S>
bool common_ok(const Matrix<S>& an, const Matrix<S>& bn, const Vector<S>& x) {
  return is_eigenvector(an, x, Num<S>::one()) && is_eigenvector(bn, x, Num<S>::one());
}

// Unit-mean columns of K* at critical nodes, (+)-summed; an eigenvector of K
// whenever lambda(K) = 1, also for reducible K.
template <class S>
Vector<S> critical_column_sum(const Matrix<S>& k) {
  Vector<S> z(k.n(), Num<S>::zero());
  if (!karp_mean(k)) return z;
  const auto [kn, mean] = normalize_to_unit(k);
  auto star = kleene_star(kn);
  if (!star) return z;
  const CriticalGraph<S> crit = critical_graph(kn);
  for (std::size_t j : crit.node_list()) z = oplus(z, star.value().column(j));
  return z;
}

}  // namespace detail

// The eigenspace of A/lambda(A) is invariant under B/lambda(B) =: B~. With V
// the basis matrix, K = V \ (B~ V) is the greatest solution of V K <= B~ V;
// when V K = B~ V, an eigenvector z of K gives the common eigenvector V z.
// If that check fails, the fallback sums the periodic orbit of the principal
// eigenvector of A under B~.
template <class S>
CommonEigenvector<S> common_eigenvector(const Matrix<S>& a, const Matrix<S>& b,
                                        std::optional<std::size_t> budget = std::nullopt) {
  using N = Num<S>;
  detail::require_square(a, "common_eigenvector");
  detail::require_same_shape(a, b, "common_eigenvector");
  detail::require_direct_sum(a, "common_eigenvector");
  detail::require_direct_sum(b, "common_eigenvector");
  if (!commutes(a, b)) throw NotCommuting("common_eigenvector: A and B do not commute");
  const auto [an, mean_a] = normalize_to_unit(a);
  const auto [bn, mean_b] = normalize_to_unit(b);
  CommonEigenvector<S> out{{}, lambda_value(mean_a), lambda_value(mean_b)};

  const std::vector<Vector<S>> basis = eigenspace_basis(an);
  const std::size_t n = a.n();
  Matrix<S> v(n, basis.size(), a.tol());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) v(i, k) = basis[k][i];
  const Matrix<S> bv = otimes(bn, v);
  const Matrix<S> k = left_residual(v, bv);
  if (approx_equal(otimes(v, k), bv)) {
    Vector<S> x = otimes(v, detail::critical_column_sum(k));
    if (detail::common_ok(an, bn, x)) {
      out.x = std::move(x);
      return out;
    }
  }

  // y, B~y, B~^2 y, ... stay eigenvectors of A~; once periodic with period g,
  // the (+)-sum of one period is fixed by B~.
  Vector<S> y = principal_eigenvector(an);
  std::vector<Vector<S>> orbit{y};
  const std::size_t limit = budget.value_or(default_power_budget(n, n) + n);
  for (std::size_t t = 1; t <= limit; ++t) {
    y = otimes(bn, y);
    for (std::size_t s = 0; s < orbit.size(); ++s) {
      if (!approx_equal(orbit[s], y, a.tol())) continue;
      Vector<S> x(n, N::zero());
      for (std::size_t r = s; r < orbit.size(); ++r) x = oplus(x, orbit[r]);
      if (!detail::common_ok(an, bn, x)) break;
      out.x = std::move(x);
      return out;
    }
    orbit.push_back(y);
  }
  throw CertificationFailure("common_eigenvector: no positive common eigenvector was certified");
}

struct BooleanDigraphPair {
  Graph g1;
  Graph g2;
  bool commuting = false;  // G1 G2 == G2 G1 as Boolean matrices
};

// Boolean product commutation of two graphs on the same nodes.
bool boolean_commute(const Graph& g1, const Graph& g2);

// Sat(A/lambda(A), x) and Sat(B/lambda(B), x) for a common eigenvector x.
template <class S>
BooleanDigraphPair boolean_saturation_pair(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& x) {
  detail::require_same_shape(a, b, "boolean_saturation_pair");
  const auto [an, mean_a] = normalize_to_unit(a);
  const auto [bn, mean_b] = normalize_to_unit(b);
  if (!detail::common_ok(an, bn, x)) {
    throw PreconditionError("boolean_saturation_pair: x is not a common eigenvector");
  }
  BooleanDigraphPair pair{saturation_graph(an, x).structure(), saturation_graph(bn, x).structure(), false};
  pair.commuting = boolean_commute(pair.g1, pair.g2);
  return pair;
}

// A cycle of G1 inside the nodes of nontrivial strong components of G2, and a
// cycle of G2 inside those of G1.
std::pair<Path, Path> commuting_cycle_witness(const BooleanDigraphPair& pair);

}  // namespace maxalg
