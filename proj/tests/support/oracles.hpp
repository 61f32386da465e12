#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's algorithms beyond the Matrix container and Num<> arithmetic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "maxalg/matrix.hpp"

namespace oracle {

using maxalg::Matrix;
using maxalg::Num;

// Elementary cycles as closed node lists, generated per node subset and
// permutation of the subset (smallest node first).
template <class S>
std::vector<std::vector<std::size_t>> cycles(const Matrix<S>& a) {
  using N = Num<S>;
  const std::size_t n = a.n();
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) nodes.push_back(i);
    }
    do {
      bool ok = true;
      for (std::size_t k = 0; k < nodes.size() && ok; ++k) {
        ok = !N::is_zero(a(nodes[k], nodes[(k + 1) % nodes.size()]));
      }
      if (ok) {
        auto c = nodes;
        c.push_back(nodes.front());
        out.push_back(std::move(c));
      }
    } while (std::next_permutation(nodes.begin() + 1, nodes.end()));
  }
  return out;
}

template <class S>
S weight(const Matrix<S>& a, const std::vector<std::size_t>& c) {
  S w = Num<S>::one();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) w = Num<S>::mul(w, a(c[k], c[k + 1]));
  return w;
}

template <class S>
struct Mean {
  S weight;
  std::size_t length;
};

// Largest cycle geometric mean over all elementary cycles.
template <class S>
std::optional<Mean<S>> max_mean(const Matrix<S>& a) {
  std::optional<Mean<S>> best;
  for (const auto& c : cycles(a)) {
    Mean<S> m{weight(a, c), c.size() - 1};
    if (!best || Num<S>::root_cmp(m.weight, m.length, best->weight, best->length) > 0) best = m;
  }
  return best;
}

// Sign of (max mean) - 1: -1, 0 or +1; -1 for acyclic matrices.
template <class S>
int max_mean_vs_one(const Matrix<S>& a) {
  auto m = max_mean(a);
  if (!m) return -1;
  return Num<S>::root_cmp(m->weight, m->length, Num<S>::one(), 1);
}

// Heaviest walk of length exactly t between every pair, by dynamic programming
// over walk length from each source.
template <class S>
Matrix<S> power_dp(const Matrix<S>& a, std::size_t t) {
  using N = Num<S>;
  const std::size_t n = a.n();
  Matrix<S> out(n, n, a.tol());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<S> best(n, N::zero());
    best[i] = N::one();
    for (std::size_t step = 0; step < t; ++step) {
      std::vector<S> next(n, N::zero());
      for (std::size_t u = 0; u < n; ++u) {
        if (N::is_zero(best[u])) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (N::is_zero(a(u, v))) continue;
          S w = N::mul(best[u], a(u, v));
          if (N::raw_less(next[v], w)) next[v] = w;
        }
      }
      best = std::move(next);
    }
    for (std::size_t j = 0; j < n; ++j) out(i, j) = best[j];
  }
  return out;
}

// Heaviest simple path between every pair (1 on the diagonal); equals the
// Kleene star when no cycle weighs more than 1.
template <class S>
Matrix<S> star_by_paths(const Matrix<S>& a) {
  using N = Num<S>;
  const std::size_t n = a.n();
  Matrix<S> out = Matrix<S>::identity(n, a.tol());
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v, const S& w) -> void {
    for (std::size_t u = 0; u < n; ++u) {
      if (used[u] || N::is_zero(a(v, u))) continue;
      S wu = N::mul(w, a(v, u));
      if (N::raw_less(out(start, u), wu)) out(start, u) = wu;
      used[u] = true;
      self(self, start, u, wu);
      used[u] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = true;
    dfs(dfs, s, s, N::one());
    used[s] = false;
  }
  return out;
}

// Reachability by repeated Boolean squaring of (I + A).
template <class S>
std::vector<std::vector<bool>> reachability(const Matrix<S>& a) {
  const std::size_t n = a.n();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || !Num<S>::is_zero(a(i, j));
  }
  for (std::size_t round = 0; round < n; ++round) {
    auto next = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || r[k][j];
    r = std::move(next);
  }
  return r;
}

}  // namespace oracle
