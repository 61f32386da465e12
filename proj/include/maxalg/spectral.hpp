#pragma once

// Max-algebraic spectral theory: maximum cycle geometric mean (the greatest
// eigenvalue), critical graph, eigenspace basis and principal eigenvector.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxalg/digraph.hpp"
#include "maxalg/matrix.hpp"

namespace maxalg {

// A cycle geometric mean kept as the exact pair (weight, length), meaning
// weight^(1/length). Length 0 encodes the mean of an acyclic matrix, which is 0.
template <class S>
struct CycleMean {
  S weight = Num<S>::zero();
  std::size_t length = 0;
  Path witness;

  bool acyclic() const { return length == 0; }

  // weight^(1/length) when representable in S (always for float and max-plus types).
  std::optional<S> value() const {
    if (length == 0) return Num<S>::zero();
    return Num<S>::root(weight, length);
  }

  // Natural log of the mean; -inf when acyclic.
  double log_value() const {
    if (length == 0) return -INFINITY;
    return Num<S>::log(weight) / static_cast<double>(length);
  }

  // Three-way comparison of the means (cross powers in exact modes).
  int compare(const CycleMean& other) const {
    if (acyclic() || other.acyclic()) {
      return static_cast<int>(!acyclic()) - static_cast<int>(!other.acyclic());
    }
    return Num<S>::root_cmp(weight, length, other.weight, other.length);
  }
};

template <class S>
struct CriticalGraph {
  Graph edges;                // critical edges over all n nodes
  std::vector<bool> nodes;    // critical nodes
  SccDecomposition components;  // strong components of `edges`
  std::size_t cyclicity = 0;

  // Node sets of the critical components (nontrivial components of `edges`),
  // ordered by smallest node.
  std::vector<std::vector<std::size_t>> critical_components() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t c = 0; c < components.count(); ++c) {
      if (components.nontrivial[c]) out.push_back(components.components[c]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::size_t> node_list() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i]) out.push_back(i);
    }
    return out;
  }
};

namespace detail {

// Karp's recurrence on walks of fixed length, in max-times form:
//   lambda = max_v min_k (D_n(v) / D_k(v))^(1/(n-k)),
// where D_k(v) is the heaviest walk of length k ending at v. Returns the
// optimal (ratio, root) pair, or nothing for an acyclic matrix.
template <class S>
std::optional<std::pair<S, std::size_t>> karp_mean(const Matrix<S>& a) {
  using N = Num<S>;
  const std::size_t n = a.n();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<S>> d(n + 1, std::vector<S>(n, N::zero()));
  for (std::size_t v = 0; v < n; ++v) d[0][v] = N::one();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (N::is_zero(d[k - 1][u])) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (N::is_zero(a(u, v))) continue;
        S w = N::mul(d[k - 1][u], a(u, v));
        if (N::raw_less(d[k][v], w)) d[k][v] = std::move(w);
      }
    }
  }
  std::optional<std::pair<S, std::size_t>> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (N::is_zero(d[n][v])) continue;
    std::optional<std::pair<S, std::size_t>> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (N::is_zero(d[k][v])) continue;
      S ratio = N::div(d[n][v], d[k][v]);
      const std::size_t len = n - k;
      if (!worst || N::root_cmp(ratio, len, worst->first, worst->second) < 0) {
        worst.emplace(std::move(ratio), len);
      }
    }
    if (worst && (!best || N::root_cmp(worst->first, worst->second, best->first, best->second) > 0)) {
      best = std::move(worst);
    }
  }
  return best;
}

template <class S>
struct CriticalAnalysis {
  CriticalGraph<S> graph;
  Path witness;
};

// Critical edges of a matrix whose maximum cycle mean is the root pair
// (ratio, len): the edges (i,j) closing a cycle of mean lambda, detected as
// b_ij * b*_ji == 1 in a matrix B with the same cycles and lambda(B) = 1.
// When lambda is not representable, B is the Hadamard power A^(o len) / ratio,
// whose cycle means are lambda(C)^len / ratio.
template <class S>
CriticalAnalysis<S> critical_analysis(const Matrix<S>& a, const S& ratio, std::size_t len) {
  using N = Num<S>;
  const std::size_t n = a.n();
  Matrix<S> b(n, n, a.tol());
  if (auto lambda = N::root(ratio, len)) {
    b = divide(a, *lambda);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!N::is_zero(a(i, j))) b(i, j) = N::div(N::pow(a(i, j), len), ratio);
      }
    }
  }
  auto star = kleene_star(b);
  if (!star) throw CertificationFailure("normalized matrix has a cycle heavier than 1");
  const Matrix<S>& k = star.value();

  CriticalAnalysis<S> out;
  out.graph.edges = Graph(n);
  out.graph.nodes.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (N::is_zero(b(i, j))) continue;
      if (N::eq(N::mul(b(i, j), k(j, i)), N::one(), a.tol())) {
        out.graph.edges.add_edge(i, j);
        out.graph.nodes[i] = out.graph.nodes[j] = true;
      }
    }
  }
  out.graph.components = scc(out.graph.edges);
  out.graph.cyclicity = graph_cyclicity(out.graph.edges, &out.graph.nodes);
  for (const auto& [i, j] : out.graph.edges.edges()) {
    Path back = shortest_path(out.graph.edges, j, i);
    if (back.empty()) continue;
    std::vector<std::size_t> nodes{i};
    if (i != j) nodes.insert(nodes.end(), back.nodes.begin(), back.nodes.end());
    else nodes.push_back(i);
    out.witness = canonical_cycle(Path{std::move(nodes)});
    break;
  }
  if (out.witness.empty()) throw CertificationFailure("critical graph without a cycle");
  return out;
}

// Strong components of A, which must have no edges between them: A is
// irreducible or a direct sum of irreducible blocks. NotIrreducible otherwise.
template <class S>
SccDecomposition require_direct_sum(const Matrix<S>& a, const char* what) {
  const Graph g = structure_of(a);
  SccDecomposition parts = scc(g);
  for (const auto& [i, j] : g.edges()) {
    if (parts.component_of[i] != parts.component_of[j]) {
      throw NotIrreducible(std::string(what) + ": matrix is not irreducible");
    }
  }
  return parts;
}

}  // namespace detail

// lambda(A) = max over cycles of (cycle weight)^(1/length), with a critical
// cycle as witness; 0 with an empty witness for an acyclic digraph.
template <class S>
CycleMean<S> max_cycle_gmean(const Matrix<S>& a) {
  detail::require_square(a, "max_cycle_gmean");
  auto pair = detail::karp_mean(a);
  if (!pair) return {};
  auto analysis = detail::critical_analysis(a, pair->first, pair->second);
  CycleMean<S> mean;
  mean.witness = std::move(analysis.witness);
  mean.length = mean.witness.length();
  mean.weight = path_weight(a, mean.witness);
  if constexpr (Num<S>::exact) {
    if (Num<S>::root_cmp(mean.weight, mean.length, pair->first, pair->second) != 0) {
      throw CertificationFailure("critical witness does not attain the Karp mean");
    }
  }
  return mean;
}

// Critical graph: union of the cycles attaining lambda(A).
template <class S>
CriticalGraph<S> critical_graph(const Matrix<S>& a) {
  detail::require_square(a, "critical_graph");
  auto pair = detail::karp_mean(a);
  if (!pair) throw AcyclicMatrix("critical_graph: lambda(A) = 0");
  return detail::critical_analysis(a, pair->first, pair->second).graph;
}

// lambda(A) as a scalar of S. ExactnessError when the mean is irrational.
template <class S>
S lambda_value(const CycleMean<S>& mean) {
  auto v = mean.value();
  if (!v) {
    throw ExactnessError("maximum cycle mean (" + Num<S>::str(mean.weight) + ")^(1/" +
                         std::to_string(mean.length) +
                         ") is irrational; rerun in float mode or with max-plus data");
  }
  return *v;
}

// (A / lambda(A), lambda(A)); the returned matrix has maximum cycle mean 1.
template <class S>
std::pair<Matrix<S>, CycleMean<S>> normalize_to_unit(const Matrix<S>& a) {
  CycleMean<S> mean = max_cycle_gmean(a);
  if (mean.acyclic()) throw AcyclicMatrix("normalize_to_unit: lambda(A) = 0");
  const S lambda = lambda_value(mean);
  return {divide(a, lambda), std::move(mean)};
}

// Generators of the eigenspace of an irreducible matrix: the columns of
// (A/lambda)* at critical nodes, one per critical component (its smallest
// node). Columns within a component are checked to be proportional.
// Also accepted: a direct sum of irreducible blocks (no edges between strong
// components) that all share lambda, such as the identity.
template <class S>
std::vector<Vector<S>> eigenspace_basis(const Matrix<S>& a) {
  detail::require_square(a, "eigenspace_basis");
  const SccDecomposition parts = detail::require_direct_sum(a, "eigenspace_basis");
  auto [normalized, mean] = normalize_to_unit(a);
  auto star = kleene_star(normalized);
  if (!star) throw CertificationFailure("normalized matrix has a divergent star");
  const Matrix<S>& k = star.value();
  const CriticalGraph<S> crit = critical_graph(normalized);
  for (std::size_t c = 0; c < parts.count(); ++c) {
    const auto& comp = parts.components[c];
    if (std::none_of(comp.begin(), comp.end(), [&](std::size_t v) { return crit.nodes[v]; })) {
      throw NotIrreducible("eigenspace_basis: blocks of a reducible matrix have different lambda");
    }
  }
  std::vector<Vector<S>> basis;
  for (const auto& comp : crit.critical_components()) {
    const std::size_t rep = comp.front();
    Vector<S> col = k.column(rep);
    for (std::size_t j : comp) {
      if (!approx_equal(k.column(j), scale(k(rep, j), col), a.tol())) {
        throw CertificationFailure("critical columns of one component are not proportional");
      }
    }
    basis.push_back(std::move(col));
  }
  return basis;
}

// Positive eigenvector of an irreducible matrix: the (+)-sum of the basis.
template <class S>
Vector<S> principal_eigenvector(const Matrix<S>& a) {
  const auto basis = eigenspace_basis(a);
  Vector<S> x(a.n(), Num<S>::zero());
  for (const auto& v : basis) x = oplus(x, v);
  return x;
}

// max_j a_ij x_j == lambda x_i for every i (exact, or within the tolerance).
template <class S>
bool is_eigenvector(const Matrix<S>& a, const Vector<S>& x, const S& lambda) {
  if (x.size() != a.cols()) throw DimensionMismatch("is_eigenvector");
  if (!is_positive(x)) return false;
  return approx_equal(otimes(a, x), scale(lambda, x), a.tol());
}

}  // namespace maxalg
