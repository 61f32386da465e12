#pragma once

// Weighted digraph view of a matrix and the structural algorithms the rest of
// the library consumes: strong components, elementary cycles, cyclicity and
// threshold digraphs.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "maxalg/matrix.hpp"

namespace maxalg {

// Unweighted adjacency structure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : out_(n), in_(n) {}

  std::size_t size() const { return out_.size(); }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const;
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return in_[v]; }
  std::size_t edge_count() const;
  // Edges as (from, to) pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct SccDecomposition {
  // Components in reverse topological order of the condensation; nodes sorted
  // within each component.
  std::vector<std::vector<std::size_t>> components;
  // A component is nontrivial iff it contains a cycle (more than one node, or a loop).
  std::vector<bool> nontrivial;
  std::vector<std::size_t> component_of;

  std::size_t count() const { return components.size(); }
  // Union of node sets of nontrivial components.
  std::vector<bool> cyclic_nodes() const;
};

SccDecomposition scc(const Graph& g);

// True iff g is strongly connected (and has at least one node).
bool strongly_connected(const Graph& g);

// Nodes reachable from `from` (including itself).
std::vector<bool> reachable(const Graph& g, std::size_t from);

// Shortest path from -> to following edges, optionally restricted to the nodes
// flagged in `allowed`. Empty when no path exists.
Path shortest_path(const Graph& g, std::size_t from, std::size_t to,
                   const std::vector<bool>* allowed = nullptr);

// Some elementary cycle of g using only allowed nodes, or an empty path.
Path find_cycle(const Graph& g, const std::vector<bool>* allowed = nullptr);

// Per strong component the gcd of its cycle lengths, combined by lcm. Only the
// nodes flagged in `nodes` are considered (all nodes when null); each of them
// must lie on a cycle of the induced subgraph, otherwise PreconditionError.
std::size_t graph_cyclicity(const Graph& g, const std::vector<bool>* nodes = nullptr);

// Elementary cycles of g of length <= max_len, each once, starting at its
// smallest node. Guarded by a node count limit (BudgetExceeded).
std::vector<Path> elementary_cycles(const Graph& g, std::size_t max_len, std::size_t max_nodes = 10);

template <class S>
struct Edge {
  std::size_t from;
  std::size_t to;
  S weight;
};

template <class S>
struct Digraph {
  std::size_t n = 0;
  std::vector<Edge<S>> edges;

  Graph structure() const {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.from, e.to);
    return g;
  }
};

template <class S>
struct WeightedCycle {
  Path cycle;
  S weight;
};

// Edge (i,j) iff a_ij > 0.
template <class S>
Digraph<S> digraph_of(const Matrix<S>& a) {
  detail::require_square(a, "digraph_of");
  Digraph<S> g{a.n(), {}};
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!Num<S>::is_zero(a(i, j))) g.edges.push_back({i, j, a(i, j)});
    }
  }
  return g;
}

template <class S>
Graph structure_of(const Matrix<S>& a) {
  detail::require_square(a, "structure_of");
  Graph g(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!Num<S>::is_zero(a(i, j))) g.add_edge(i, j);
    }
  }
  return g;
}

// Rebuilds the matrix of a weighted digraph, zero off the edges.
template <class S>
Matrix<S> matrix_of(const Digraph<S>& g, double tol = kDefaultTolerance) {
  Matrix<S> a(g.n, g.n, tol);
  for (const auto& e : g.edges) a(e.from, e.to) = e.weight;
  return a;
}

// Boolean (0/1) matrix of a graph in scalar type S.
template <class S>
Matrix<S> boolean_matrix(const Graph& g, double tol = kDefaultTolerance) {
  Matrix<S> a(g.size(), g.size(), tol);
  for (const auto& [i, j] : g.edges()) a(i, j) = Num<S>::one();
  return a;
}

template <class S>
bool irreducible(const Matrix<S>& a) {
  return strongly_connected(structure_of(a));
}

template <class S>
SccDecomposition scc(const Digraph<S>& g) {
  return scc(g.structure());
}

template <class S>
std::vector<WeightedCycle<S>> enumerate_cycles(const Digraph<S>& g, std::size_t max_len,
                                               std::size_t max_nodes = 10) {
  const Matrix<S> a = matrix_of(g);
  std::vector<WeightedCycle<S>> out;
  for (Path& c : elementary_cycles(g.structure(), max_len, max_nodes)) {
    S w = path_weight(a, c);
    out.push_back({std::move(c), std::move(w)});
  }
  return out;
}

template <class S>
std::vector<WeightedCycle<S>> enumerate_cycles(const Matrix<S>& a, std::size_t max_nodes = 10) {
  return enumerate_cycles(digraph_of(a), a.n(), max_nodes);
}

// Edges (i,j) with a_ij >= theta.
template <class S>
Digraph<S> threshold_digraph(const Matrix<S>& a, const S& theta) {
  if (Num<S>::is_zero(theta)) throw DomainError("threshold must be positive");
  Digraph<S> g{a.n(), {}};
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!Num<S>::is_zero(a(i, j)) && Num<S>::le(theta, a(i, j), a.tol())) {
        g.edges.push_back({i, j, a(i, j)});
      }
    }
  }
  return g;
}

template <class S>
struct ThresholdLevel {
  S theta;
  SccDecomposition components;
};

// Distinct positive entry values in decreasing order, each with the strong
// components of its threshold digraph; runs of identical decompositions are
// merged into their first (largest) threshold.
template <class S>
std::vector<ThresholdLevel<S>> threshold_spectrum(const Matrix<S>& a) {
  using N = Num<S>;
  std::vector<S> values;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!N::is_zero(a(i, j))) values.push_back(a(i, j));
    }
  }
  std::sort(values.begin(), values.end(), [](const S& x, const S& y) { return N::raw_less(y, x); });
  std::vector<S> distinct;
  for (const S& v : values) {
    if (distinct.empty() || !N::eq(distinct.back(), v, a.tol())) distinct.push_back(v);
  }
  std::vector<ThresholdLevel<S>> levels;
  for (const S& theta : distinct) {
    SccDecomposition d = scc(threshold_digraph(a, theta));
    if (!levels.empty() && levels.back().components.components == d.components &&
        levels.back().components.nontrivial == d.nontrivial) {
      continue;
    }
    levels.push_back({theta, std::move(d)});
  }
  return levels;
}

}  // namespace maxalg
