#pragma once

// Powers of a max-times matrix in the long run: transient and period, the
// critical matrix, CSR decompositions A^t = C S^t R, strong paths, the
// Nachtigall expansion and the transient bound built on it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxalg/scaling.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

// Entries of A on critical edges, zero elsewhere.
template <class S>
Matrix<S> critical_matrix(const Matrix<S>& a) {
  const CriticalGraph<S> crit = critical_graph(a);
  Matrix<S> out(a.n(), a.n(), a.tol());
  for (const auto& [i, j] : crit.edges.edges()) out(i, j) = a(i, j);
  return out;
}

template <class S>
struct PeriodicityProfile {
  std::size_t transient = 0;  // T: A^(t+period) = A^t for all t >= T (T >= 1)
  std::size_t period = 1;
  std::size_t predicted_period = 1;  // cyclicity of the critical graph
  std::vector<Matrix<S>> powers;     // A^T, ..., A^(T+period)
};

namespace detail {

template <class S>
std::string matrix_key(const Matrix<S>& a) {
  std::string key;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      key += Num<S>::str(a(i, j));
      key += ',';
    }
  }
  return key;
}

template <class S>
bool unit_mean(const CycleMean<S>& mean, double tol) {
  if (mean.acyclic()) return false;
  if constexpr (Num<S>::exact) {
    return Num<S>::root_cmp(mean.weight, mean.length, Num<S>::one(), 1) == 0;
  } else {
    return Num<S>::eq(*mean.value(), Num<S>::one(), tol);
  }
}

// Irreducible, or a direct sum of irreducible blocks that all attain lambda(A)
// (e.g. the identity). Returns the critical graph.
template <class S>
CriticalGraph<S> require_equal_blocks(const Matrix<S>& a, const char* what) {
  const SccDecomposition parts = require_direct_sum(a, what);
  const auto pair = karp_mean(a);
  if (!pair) throw NotIrreducible(std::string(what) + ": matrix is not irreducible");
  CriticalGraph<S> crit = critical_analysis(a, pair->first, pair->second).graph;
  for (const auto& comp : parts.components) {
    if (std::none_of(comp.begin(), comp.end(), [&](std::size_t v) { return crit.nodes[v]; })) {
      throw NotIrreducible(std::string(what) + ": blocks of a reducible matrix have different lambda");
    }
  }
  return crit;
}

}  // namespace detail

inline std::size_t default_power_budget(std::size_t n, std::size_t cyclicity) {
  return 3 * n * n + 2 * cyclicity;
}

// Minimal T and period with A^(t+period) = A^t for t >= T, for irreducible A
// with lambda(A) = 1 (or a direct sum of such blocks). Powers A^1, A^2, ... are generated one by one until the
// first repetition A^t = A^s (s < t); then T = s and period = t - s, both
// minimal because each power determines all later ones.
template <class S>
PeriodicityProfile<S> transient_and_period(const Matrix<S>& a, std::optional<std::size_t> budget = std::nullopt) {
  detail::require_square(a, "transient_and_period");
  const CriticalGraph<S> crit = detail::require_equal_blocks(a, "transient_and_period");
  const CycleMean<S> mean = max_cycle_gmean(a);
  if (!detail::unit_mean(mean, a.tol())) {
    throw NotNormalized("transient_and_period: lambda(A) must be 1; normalize first");
  }
  const std::size_t cyc = crit.cyclicity;
  const std::size_t limit = budget.value_or(default_power_budget(a.n(), cyc));

  std::vector<Matrix<S>> powers{a};  // powers[t-1] = A^t
  std::unordered_map<std::string, std::size_t> seen;
  if constexpr (Num<S>::exact) seen.emplace(detail::matrix_key(a), 1);
  for (std::size_t t = 2; t <= limit; ++t) {
    powers.push_back(otimes(powers.back(), a));
    const Matrix<S>& p = powers.back();
    std::optional<std::size_t> earlier;
    if constexpr (Num<S>::exact) {
      auto [it, inserted] = seen.emplace(detail::matrix_key(p), t);
      if (!inserted) earlier = it->second;
    } else {
      for (std::size_t s = 1; s < t && !earlier; ++s) {
        if (approx_equal(powers[s - 1], p)) earlier = s;
      }
    }
    if (earlier) {
      PeriodicityProfile<S> out;
      out.transient = *earlier;
      out.period = t - *earlier;
      out.predicted_period = cyc;
      out.powers.assign(powers.begin() + static_cast<std::ptrdiff_t>(*earlier - 1), powers.end());
      return out;
    }
  }
  throw BudgetExceeded("transient_and_period: no repetition among the first " + std::to_string(limit) +
                       " powers");
}

template <class S>
struct CsrTriple {
  CycleMean<S> mean;
  S lambda;
  Vector<S> x;            // visualizing scaling: V = X^-1 (A/lambda) X
  Matrix<S> visualized;   // V
  std::size_t gamma = 1;  // cyclicity of the critical graph
  std::vector<std::size_t> critical_nodes;
  Matrix<S> c;  // critical columns of (V^gamma)*, zero elsewhere
  Matrix<S> s;  // critical matrix of V
  Matrix<S> r;  // critical rows of (V^gamma)*, zero elsewhere
  std::size_t transient = 1;  // periodicity transient of V
  std::size_t csr_onset = 1;  // least t0 with V^t = C S^t R on [t0, transient + 3 gamma]
};

namespace detail {

// C, S, R of a visualized matrix v (lambda(v) = 1, entries <= 1).
template <class S>
void csr_parts(const Matrix<S>& v, const CriticalGraph<S>& crit, Matrix<S>& c, Matrix<S>& s, Matrix<S>& r) {
  const std::size_t n = v.n();
  auto star = kleene_star(mat_power(v, crit.cyclicity));
  if (!star) throw CertificationFailure("visualized power has a divergent star");
  const Matrix<S>& k = star.value();
  c = Matrix<S>(n, n, v.tol());
  r = Matrix<S>(n, n, v.tol());
  s = Matrix<S>(n, n, v.tol());
  for (std::size_t j = 0; j < n; ++j) {
    if (!crit.nodes[j]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      c(i, j) = k(i, j);
      r(j, i) = k(j, i);
    }
  }
  for (const auto& [i, j] : crit.edges.edges()) s(i, j) = v(i, j);
}

template <class S>
Matrix<S> csr_product(const Matrix<S>& c, const Matrix<S>& s, const Matrix<S>& r, std::size_t t) {
  return otimes(otimes(c, mat_power(s, t)), r);
}

}  // namespace detail

// A^t = lambda^t X (C S^t R) X^-1 for t >= T; the decomposition is certified
// on [T, T + 3 gamma] before it is returned.
template <class S>
CsrTriple<S> csr_decompose(const Matrix<S>& a, std::optional<std::size_t> budget = std::nullopt) {
  detail::require_square(a, "csr_decompose");
  detail::require_equal_blocks(a, "csr_decompose");
  CsrTriple<S> out;
  auto [normalized, mean] = normalize_to_unit(a);
  out.lambda = lambda_value(mean);
  out.mean = std::move(mean);
  out.x = principal_eigenvector(normalized);
  out.visualized = apply_scaling(normalized, out.x);
  const CriticalGraph<S> crit = critical_graph(out.visualized);
  out.gamma = crit.cyclicity;
  out.critical_nodes = crit.node_list();
  detail::csr_parts(out.visualized, crit, out.c, out.s, out.r);

  const PeriodicityProfile<S> profile = transient_and_period(out.visualized, budget);
  out.transient = profile.transient;
  const std::size_t last = profile.transient + 3 * out.gamma;
  std::vector<bool> holds(last + 1, false);
  Matrix<S> p = out.visualized;
  for (std::size_t t = 1; t <= last; ++t) {
    if (t > 1) p = otimes(p, out.visualized);
    holds[t] = approx_equal(p, detail::csr_product(out.c, out.s, out.r, t));
  }
  for (std::size_t t = profile.transient; t <= last; ++t) {
    if (!holds[t]) {
      throw CertificationFailure("csr_decompose: V^" + std::to_string(t) + " differs from C S^t R");
    }
  }
  out.csr_onset = profile.transient;
  while (out.csr_onset > 1 && holds[out.csr_onset - 1]) --out.csr_onset;
  return out;
}

// lambda^t X (C S^t R) X^-1, in the coordinates of the original matrix.
template <class S>
Matrix<S> csr_power(const CsrTriple<S>& triple, std::size_t t) {
  using N = Num<S>;
  if (t == 0) throw PreconditionError("csr_power: t must be at least 1");
  const Matrix<S> m = detail::csr_product(triple.c, triple.s, triple.r, t);
  const S scale_t = N::pow(triple.lambda, t);
  Matrix<S> out(m.n(), m.n(), m.tol());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (N::is_zero(m(i, j))) continue;
      out(i, j) = N::div(N::mul(N::mul(scale_t, triple.x[i]), m(i, j)), triple.x[j]);
    }
  }
  return out;
}

// Heaviest walk of length t from i to j through at least one critical node;
// zero when there is none.
template <class S>
S strong_path_weight(const Matrix<S>& a, std::size_t i, std::size_t j, std::size_t t) {
  using N = Num<S>;
  detail::require_square(a, "strong_path_weight");
  const std::size_t n = a.n();
  if (i >= n || j >= n) throw DimensionMismatch("strong_path_weight: node out of range");
  if (t == 0) throw PreconditionError("strong_path_weight: t must be at least 1");
  if (!detail::karp_mean(a)) return N::zero();
  const std::vector<bool> critical = critical_graph(a).nodes;
  // best[f][v]: heaviest walk i -> v so far; f = 1 once a critical node was visited.
  std::vector<std::vector<S>> best(2, std::vector<S>(n, N::zero()));
  best[critical[i] ? 1 : 0][i] = N::one();
  for (std::size_t step = 0; step < t; ++step) {
    std::vector<std::vector<S>> next(2, std::vector<S>(n, N::zero()));
    for (std::size_t f = 0; f < 2; ++f) {
      for (std::size_t u = 0; u < n; ++u) {
        if (N::is_zero(best[f][u])) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (N::is_zero(a(u, v))) continue;
          const std::size_t g = (f == 1 || critical[v]) ? 1 : 0;
          next[g][v] = N::max(next[g][v], N::mul(best[f][u], a(u, v)));
        }
      }
    }
    best = std::move(next);
  }
  return best[1][j];
}

template <class S>
struct NachtigallTerm {
  CycleMean<S> mean;
  S lambda;
  std::vector<std::size_t> support;  // critical nodes of this stage
  std::size_t gamma = 1;
  // C, S, R of the stage's submatrix divided by lambda, embedded in n x n
  // (zero outside the submatrix) and mapped back from visualized coordinates.
  Matrix<S> c;
  Matrix<S> s;
  Matrix<S> r;
};

template <class S>
struct NachtigallExpansion {
  std::size_t n = 0;
  double tol = kDefaultTolerance;
  std::vector<NachtigallTerm<S>> terms;
  std::optional<std::size_t> validity_start;  // unknown when the budget ran out
  std::size_t budget = 0;
};

namespace detail {

template <class S>
Matrix<S> principal_submatrix(const Matrix<S>& a, const std::vector<std::size_t>& nodes) {
  Matrix<S> sub(nodes.size(), nodes.size(), a.tol());
  for (std::size_t p = 0; p < nodes.size(); ++p)
    for (std::size_t q = 0; q < nodes.size(); ++q) sub(p, q) = a(nodes[p], nodes[q]);
  return sub;
}

template <class S>
struct Stage {
  std::vector<std::size_t> nodes;  // rows/columns still present
  CycleMean<S> mean;
  CriticalGraph<S> crit;           // in submatrix indices
};

// Successive maximum cycle means, deleting the critical nodes each time until
// what is left is acyclic.
template <class S>
std::vector<Stage<S>> nachtigall_stages(const Matrix<S>& a) {
  std::vector<Stage<S>> stages;
  std::vector<std::size_t> remaining(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) remaining[i] = i;
  while (!remaining.empty()) {
    const Matrix<S> sub = principal_submatrix(a, remaining);
    CycleMean<S> mean = max_cycle_gmean(sub);
    if (mean.acyclic()) break;
    Stage<S> stage{remaining, std::move(mean), critical_graph(sub)};
    std::vector<std::size_t> left;
    for (std::size_t p = 0; p < remaining.size(); ++p) {
      if (!stage.crit.nodes[p]) left.push_back(remaining[p]);
    }
    stages.push_back(std::move(stage));
    remaining = std::move(left);
  }
  return stages;
}

}  // namespace detail

// (+)_k lambda_k^t C_k S_k^t R_k.
template <class S>
Matrix<S> expansion_power(const NachtigallExpansion<S>& e, std::size_t t) {
  using N = Num<S>;
  if (t == 0) throw PreconditionError("expansion_power: t must be at least 1");
  Matrix<S> out(e.n, e.n, e.tol);
  for (const auto& term : e.terms) {
    out = oplus(out, scale(N::pow(term.lambda, t), detail::csr_product(term.c, term.s, term.r, t)));
  }
  return out;
}

// Each stage: divide the remaining submatrix by its cycle mean, visualize it
// with an FP scaling, take the CSR triple, then delete the critical nodes.
// validity_start is the least t <= budget with expansion_power = A^t on
// [t, t + 2 gamma_1]. Reducible input is accepted (e.g. diagonal matrices).
template <class S>
NachtigallExpansion<S> nachtigall_expansion(const Matrix<S>& a, std::optional<std::size_t> budget = std::nullopt) {
  using N = Num<S>;
  detail::require_square(a, "nachtigall_expansion");
  const std::size_t n = a.n();
  NachtigallExpansion<S> e;
  e.n = n;
  e.tol = a.tol();
  e.budget = budget.value_or(10 * n * n + 20);
  for (auto& stage : detail::nachtigall_stages(a)) {
    NachtigallTerm<S> term;
    term.lambda = lambda_value(stage.mean);
    const Matrix<S> sub = divide(detail::principal_submatrix(a, stage.nodes), term.lambda);
    const Vector<S> x = fp_scaling(sub).value();
    const Matrix<S> v = apply_scaling(sub, x);
    Matrix<S> c, s, r;
    detail::csr_parts(v, stage.crit, c, s, r);
    term.gamma = stage.crit.cyclicity;
    term.c = Matrix<S>(n, n, a.tol());
    term.s = Matrix<S>(n, n, a.tol());
    term.r = Matrix<S>(n, n, a.tol());
    const auto& nodes = stage.nodes;
    auto back = [&](const Matrix<S>& m, Matrix<S>& dst) {
      for (std::size_t p = 0; p < nodes.size(); ++p) {
        for (std::size_t q = 0; q < nodes.size(); ++q) {
          if (!N::is_zero(m(p, q))) dst(nodes[p], nodes[q]) = N::div(N::mul(x[p], m(p, q)), x[q]);
        }
      }
    };
    back(c, term.c);
    back(s, term.s);
    back(r, term.r);
    for (std::size_t p : stage.crit.node_list()) term.support.push_back(nodes[p]);
    term.mean = std::move(stage.mean);
    e.terms.push_back(std::move(term));
  }

  const std::size_t window = 2 * (e.terms.empty() ? 1 : e.terms.front().gamma);
  const std::size_t last = e.budget + window;
  std::vector<bool> holds(last + 1, false);
  Matrix<S> p = a;
  for (std::size_t t = 1; t <= last; ++t) {
    if (t > 1) p = otimes(p, a);
    holds[t] = approx_equal(p, expansion_power(e, t));
  }
  std::size_t run = 0;  // consecutive successes ending at t
  for (std::size_t t = last; t >= 1; --t) {
    run = holds[t] ? run + 1 : 0;
    if (run > window && t <= e.budget) e.validity_start = t;
  }
  return e;
}

// 2 n^2 (max log a_ij - min log a_ij) / (log lambda_1 - log lambda_2) over the
// positive entries, with lambda_1 > lambda_2 the first two Nachtigall
// coefficients. Nothing when the expansion has fewer than two terms.
template <class S>
std::optional<double> transient_bound(const Matrix<S>& a) {
  using N = Num<S>;
  detail::require_square(a, "transient_bound");
  const auto stages = detail::nachtigall_stages(a);
  if (stages.size() < 2) return std::nullopt;
  const double gap = stages[0].mean.log_value() - stages[1].mean.log_value();
  if (!(gap > 0)) return std::nullopt;
  double hi = -INFINITY, lo = INFINITY;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (N::is_zero(a(i, j))) continue;
      const double l = N::log(a(i, j));
      hi = std::max(hi, l);
      lo = std::min(lo, l);
    }
  }
  const double n = static_cast<double>(a.n());
  return 2 * n * n * (hi - lo) / gap;
}

}  // namespace maxalg
