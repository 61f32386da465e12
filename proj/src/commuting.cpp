#include "maxalg/commuting.hpp"

namespace maxalg {

bool boolean_commute(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.size();
  if (g2.size() != n) throw DimensionMismatch("boolean_commute: graphs of different sizes");
  auto product = [n](const Graph& x, const Graph& y) {
    std::vector<std::vector<bool>> p(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k : x.successors(i))
        for (std::size_t j : y.successors(k)) p[i][j] = true;
    return p;
  };
  return product(g1, g2) == product(g2, g1);
}

std::pair<Path, Path> commuting_cycle_witness(const BooleanDigraphPair& pair) {
  const std::size_t n = pair.g1.size();
  if (pair.g2.size() != n) throw DimensionMismatch("commuting_cycle_witness: graphs of different sizes");
  if (!boolean_commute(pair.g1, pair.g2)) {
    throw PreconditionError("commuting_cycle_witness: the graphs do not commute");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (pair.g1.successors(v).empty() || pair.g2.successors(v).empty()) {
      throw PreconditionError("commuting_cycle_witness: node " + std::to_string(v + 1) + " has out-degree 0");
    }
  }
  const std::vector<bool> in2 = scc(pair.g2).cyclic_nodes();
  const std::vector<bool> in1 = scc(pair.g1).cyclic_nodes();
  Path c1 = find_cycle(pair.g1, &in2);
  Path c2 = find_cycle(pair.g2, &in1);
  if (c1.empty() || c2.empty()) {
    throw WitnessNotFound("commuting_cycle_witness: no cycle inside the other graph's cyclic nodes");
  }
  return {std::move(c1), std::move(c2)};
}

}  // namespace maxalg
