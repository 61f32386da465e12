#pragma once

// Max-balancing: a diagonal similarity after which every edge is a
// minimum-weight edge of some cycle through it, equivalently every cut carries
// the same greatest weight in both directions.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "maxalg/scaling.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

enum class BalanceCheck { CycleCover, Cut };

template <class S>
struct BalancingCertificate {
  Vector<S> scaling;
  Matrix<S> balanced;  // apply_scaling(A, scaling)
  std::vector<BalanceCheck> checked;
  std::vector<S> levels;  // cycle mean of each contraction round, decreasing
};

// For every edge (i,j): i is reachable from j along edges of weight >= b_ij.
template <class S>
bool is_max_balanced_cyclecover(const Matrix<S>& b) {
  using N = Num<S>;
  detail::require_square(b, "is_max_balanced_cyclecover");
  const std::size_t n = b.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (N::is_zero(b(i, j)) || i == j) continue;
      const S& w = b(i, j);
      Graph heavy(n);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (!N::is_zero(b(u, v)) && N::le(w, b(u, v), b.tol())) heavy.add_edge(u, v);
        }
      }
      if (!reachable(heavy, j)[i]) return false;
    }
  }
  return true;
}

// Every nonempty proper node set M: max weight M -> M' equals max weight M' -> M.
// Exhaustive, so limited to n <= 14.
template <class S>
bool is_max_balanced_cut(const Matrix<S>& b) {
  using N = Num<S>;
  detail::require_square(b, "is_max_balanced_cut");
  const std::size_t n = b.n();
  if (n > 14) throw SizeLimit("is_max_balanced_cut: exhaustive cut check limited to n <= 14");
  if (!irreducible(b)) throw NotIrreducible("is_max_balanced_cut: matrix is not irreducible");
  for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
    S out = N::zero(), in = N::zero();
    for (std::size_t i = 0; i < n; ++i) {
      const bool i_in = mask >> i & 1UL;
      for (std::size_t j = 0; j < n; ++j) {
        const bool j_in = mask >> j & 1UL;
        if (i_in && !j_in) out = N::max(out, b(i, j));
        if (!i_in && j_in) in = N::max(in, b(i, j));
      }
    }
    if (!N::eq(out, in, b.tol())) return false;
  }
  return true;
}

namespace detail {

// Iterative contraction. Each round takes the matrix between the current node
// groups (largest entry per ordered pair, edges inside groups dropped), scales
// the groups by its principal eigenvector so critical edges reach the round's
// cycle mean and nothing exceeds it, and merges every critical component into
// one group. Rounds end when a single group is left.
template <class S>
BalancingCertificate<S> balance_irreducible(const Matrix<S>& a) {
  using N = Num<S>;
  const std::size_t n = a.n();
  Vector<S> x(n, N::one());
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) group[i] = i;
  std::size_t groups = n;
  BalancingCertificate<S> cert;

  while (groups > 1) {
    const Matrix<S> b = apply_scaling(a, x);
    Matrix<S> c(groups, groups, a.tol());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (group[i] != group[j]) c(group[i], group[j]) = N::max(c(group[i], group[j]), b(i, j));
      }
    }
    Vector<S> y;
    try {
      y = principal_eigenvector(c);
    } catch (const ExactnessError& e) {
      throw ExactnessError(std::string("max_balance: ") + e.what());
    }
    cert.levels.push_back(lambda_value(max_cycle_gmean(c)));
    const CriticalGraph<S> crit = critical_graph(c);
    for (std::size_t i = 0; i < n; ++i) x[i] = N::mul(x[i], y[group[i]]);

    // Critical components become single groups; other groups keep their own.
    std::vector<std::size_t> renumber(groups, static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t p = 0; p < groups; ++p) {
      if (renumber[p] != static_cast<std::size_t>(-1)) continue;
      const std::size_t comp = crit.components.component_of[p];
      if (crit.components.nontrivial[comp]) {
        for (std::size_t q : crit.components.components[comp]) renumber[q] = next;
      } else {
        renumber[p] = next;
      }
      ++next;
    }
    if (next == groups) throw CertificationFailure("max_balance: contraction made no progress");
    for (auto& g : group) g = renumber[g];
    groups = next;
  }
  cert.scaling = std::move(x);
  return cert;
}

}  // namespace detail

// Irreducible input, or a direct sum of irreducible blocks (no edge between
// strong components, e.g. the identity), balanced block by block.
template <class S>
BalancingCertificate<S> max_balance(const Matrix<S>& a) {
  using N = Num<S>;
  detail::require_square(a, "max_balance");
  const std::size_t n = a.n();
  const SccDecomposition parts = detail::require_direct_sum(a, "max_balance");
  if (n == 0 || (parts.count() > 1 && std::find(parts.nontrivial.begin(), parts.nontrivial.end(), false) !=
                                          parts.nontrivial.end())) {
    throw NotIrreducible("max_balance: matrix is not irreducible");
  }

  BalancingCertificate<S> cert;
  Vector<S> x(n, N::one());
  for (const auto& comp : parts.components) {
    Matrix<S> sub(comp.size(), comp.size(), a.tol());
    for (std::size_t p = 0; p < comp.size(); ++p)
      for (std::size_t q = 0; q < comp.size(); ++q) sub(p, q) = a(comp[p], comp[q]);
    auto part = detail::balance_irreducible(sub);
    for (std::size_t p = 0; p < comp.size(); ++p) x[comp[p]] = part.scaling[p];
    cert.levels.insert(cert.levels.end(), part.levels.begin(), part.levels.end());
  }
  std::sort(cert.levels.begin(), cert.levels.end(), [](const S& u, const S& v) { return N::raw_less(v, u); });

  S smallest = x.front();
  for (const S& v : x) {
    if (N::raw_less(v, smallest)) smallest = v;
  }
  for (auto& v : x) v = N::div(v, smallest);
  cert.scaling = std::move(x);
  cert.balanced = apply_scaling(a, cert.scaling);
  if (!is_max_balanced_cyclecover(cert.balanced)) {
    throw CertificationFailure("max_balance: result fails the cycle-cover check");
  }
  cert.checked.push_back(BalanceCheck::CycleCover);
  if (n <= 8 && parts.count() == 1) {
    if (!is_max_balanced_cut(cert.balanced)) throw CertificationFailure("max_balance: result fails the cut check");
    cert.checked.push_back(BalanceCheck::Cut);
  }
  return cert;
}

}  // namespace maxalg
