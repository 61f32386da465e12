#pragma once

// Diagonal similarity scalings X^-1 A X: Fiedler-Ptak (FP) scalings, strict
// ones, saturation graphs, the row/column maxima and sandwich problems, and
// the Hadamard scaling test for signed real matrices.

#include <cstddef>
#include <vector>

#include "maxalg/digraph.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

// b_ij = x_i^-1 a_ij x_j.
template <class S>
Matrix<S> apply_scaling(const Matrix<S>& a, const Vector<S>& x) {
  detail::require_square(a, "apply_scaling");
  if (x.size() != a.n()) throw DimensionMismatch("apply_scaling: scaling vector has the wrong length");
  if (!is_positive(x)) throw DomainError("apply_scaling: scaling vector must be positive");
  Matrix<S> b(a.n(), a.n(), a.tol());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!Num<S>::is_zero(a(i, j))) b(i, j) = Num<S>::div(Num<S>::mul(a(i, j), x[j]), x[i]);
    }
  }
  return b;
}

// Entrywise inverse of a positive scaling.
template <class S>
Vector<S> inverse_scaling(const Vector<S>& x) {
  Vector<S> y;
  y.reserve(x.size());
  for (const S& v : x) y.push_back(Num<S>::div(Num<S>::one(), v));
  return y;
}

template <class S>
Vector<S> ones(std::size_t n) {
  return Vector<S>(n, Num<S>::one());
}

// x_i^-1 a_ij x_j <= 1 everywhere; with `strict`, < 1 on every positive entry.
template <class S>
bool is_fp_scaling(const Matrix<S>& a, const Vector<S>& x, bool strict) {
  using N = Num<S>;
  const Matrix<S> b = apply_scaling(a, x);
  for (std::size_t i = 0; i < b.n(); ++i) {
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (N::is_zero(b(i, j))) continue;
      if (strict ? !N::lt(b(i, j), N::one(), a.tol()) : !N::le(b(i, j), N::one(), a.tol())) return false;
    }
  }
  return true;
}

// x = A* (x) (1,...,1). Every entry of X^-1 A X is then at most 1.
template <class S>
Solvable<Vector<S>, S> fp_scaling(const Matrix<S>& a) {
  detail::require_square(a, "fp_scaling");
  auto star = kleene_star(a);
  if (!star) return star.obstruction();
  return otimes(star.value(), ones<S>(a.n()));
}

// A scaling making every positive entry strictly less than 1; exists iff
// lambda(A) < 1. In max-times data x_i is the ordinary row sum of A*. The
// max-plus types have no ordinary sum, so there x = (A/lambda)* (x) u, which
// gives a_ij x_j <= lambda x_i.
template <class S>
Solvable<Vector<S>, S> strong_fp_scaling(const Matrix<S>& a) {
  using N = Num<S>;
  detail::require_square(a, "strong_fp_scaling");
  const CycleMean<S> mean = max_cycle_gmean(a);
  if (!mean.acyclic() && !N::lt(mean.weight, N::one(), a.tol())) {
    return Obstruction<S>{mean.witness, mean.weight};
  }
  const std::size_t n = a.n();
  if constexpr (N::additive) {
    using E = decltype(N::one().exponent());
    const S c = mean.acyclic() ? S(E(-1)) : *mean.value();
    auto star = kleene_star(divide(a, c));
    return otimes(star.value(), ones<S>(n));
  } else {
    auto star = kleene_star(a);
    Vector<S> x(n, N::zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) x[i] += star.value()(i, k);
    }
    return x;
  }
}

template <class S>
struct SaturationGraph {
  Digraph<S> base;  // saturated edges, carrying their scaled weight

  Graph structure() const { return base.structure(); }
};

// Edges where x_i^-1 a_ij x_j = 1 for an FP scaling x.
template <class S>
SaturationGraph<S> saturation_graph(const Matrix<S>& a, const Vector<S>& x) {
  if (!is_fp_scaling(a, x, false)) throw NotAnFpScaling("saturation_graph: x is not an FP scaling of A");
  const Matrix<S> b = apply_scaling(a, x);
  SaturationGraph<S> out{{a.n(), {}}};
  for (std::size_t i = 0; i < b.n(); ++i) {
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (!Num<S>::is_zero(b(i, j)) && Num<S>::eq(b(i, j), Num<S>::one(), a.tol())) {
        out.base.edges.push_back({i, j, b(i, j)});
      }
    }
  }
  return out;
}

// The solution set {Q* (x) u : u positive} of a scaling problem Q (x) x <= x.
template <class S>
struct ScalingFamily {
  Matrix<S> q;
  Matrix<S> q_star;

  Vector<S> sample(const Vector<S>& u) const {
    if (u.size() != q.n()) throw DimensionMismatch("ScalingFamily::sample: wrong length");
    if (!is_positive(u)) throw DomainError("ScalingFamily::sample: u must be positive");
    return otimes(q_star, u);
  }
  Vector<S> sample() const { return sample(ones<S>(q.n())); }
};

namespace detail {

template <class S>
Solvable<ScalingFamily<S>, S> family_of(Matrix<S> q) {
  auto star = kleene_star(q);
  if (!star) return star.obstruction();
  return ScalingFamily<S>{std::move(q), star.value()};
}

}  // namespace detail

// Scalings B = X^-1 A X whose diagonal entries are the row and column maxima:
// Q = A D^-1 (+) D^-1 A with D = diag(A).
template <class S>
Solvable<ScalingFamily<S>, S> row_col_maxima_scalings(const Matrix<S>& a) {
  using N = Num<S>;
  detail::require_square(a, "row_col_maxima_scalings");
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (N::is_zero(a(i, i))) throw ZeroDiagonal(i);
  }
  Matrix<S> q(n, n, a.tol());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (N::is_zero(a(i, j))) continue;
      q(i, j) = N::max(N::div(a(i, j), a(j, j)), N::div(a(i, j), a(i, i)));
    }
  }
  return detail::family_of(std::move(q));
}

template <class S>
struct SandwichTriple {
  Matrix<S> lower;   // A_i
  Matrix<S> middle;  // B_i
  Matrix<S> upper;   // C_i
};

// Scalings with A_i <= X^-1 B_i X <= C_i for every triple:
// Q = (+)_i B_i / C_i (+) (+)_i A_i^T / B_i^T.
template <class S>
Solvable<ScalingFamily<S>, S> sandwich_scalings(const std::vector<SandwichTriple<S>>& triples) {
  using N = Num<S>;
  if (triples.empty()) throw PreconditionError("sandwich_scalings: no triples");
  const std::size_t n = triples.front().middle.n();
  Matrix<S> q(n, n, triples.front().middle.tol());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [lo, mid, up] = triples[t];
    detail::require_square(mid, "sandwich_scalings");
    if (mid.n() != n) throw DimensionMismatch("sandwich_scalings: triples of different sizes");
    detail::require_same_shape(lo, mid, "sandwich_scalings");
    detail::require_same_shape(up, mid, "sandwich_scalings");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool in_a = !N::is_zero(lo(i, j));
        const bool in_b = !N::is_zero(mid(i, j));
        const bool in_c = !N::is_zero(up(i, j));
        if ((in_a && !in_b) || (in_b && !in_c)) {
          throw PatternViolation("sandwich_scalings: triple " + std::to_string(t + 1) + ", entry (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") breaks G(A) <= G(B) <= G(C)");
        }
      }
    }
    q = oplus(q, entrywise_div(mid, up));
    q = oplus(q, entrywise_div(transpose(lo), transpose(mid)));
  }
  return detail::family_of(std::move(q));
}

// Signed real square matrix, row-major.
template <class F>
using RealMatrix = std::vector<std::vector<F>>;

namespace detail {

template <class F>
F abs_value(const F& v) {
  return v < 0 ? F(-v) : v;
}

}  // namespace detail

// Diagonal D > 0 with C = D^-1 B D satisfying 0 != |c_ii| >= |c_ij|, found as
// an FP scaling of M, m_ij = |b_ij| / |b_ii| (i != j). The negative answer is a
// cycle of M heavier than 1, i.e. a cyclic product beating the diagonal one.
template <class F>
Solvable<Vector<F>, F> hadamard_scaling_test(const RealMatrix<F>& b, double tol = kDefaultTolerance) {
  const std::size_t n = b.size();
  if (n < 2) throw PreconditionError("hadamard_scaling_test: needs n >= 2");
  for (const auto& row : b) {
    if (row.size() != n) throw DimensionMismatch("hadamard_scaling_test: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][i] == 0) throw ZeroDiagonal(i);
  }
  Matrix<F> m(n, n, tol);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m(i, j) = detail::abs_value(b[i][j]) / detail::abs_value(b[i][i]);
    }
  }
  return fp_scaling(m);
}

// |c_ii| >= |c_ij| and c_ii != 0 for C = D^-1 B D.
template <class F>
bool hadamard_dominant(const RealMatrix<F>& b, const Vector<F>& d, double tol = kDefaultTolerance) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    const F cii = detail::abs_value(b[i][i]);
    if (cii == 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const F cij = detail::abs_value(b[i][j]) * d[j] / d[i];
      if (!Num<F>::le(cij, cii, tol)) return false;
    }
  }
  return true;
}

}  // namespace maxalg
