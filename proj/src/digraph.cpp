#include "maxalg/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace maxalg {

void Graph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw DimensionMismatch("edge endpoint out of range");
  if (has_edge(from, to)) return;
  out_[from].insert(std::lower_bound(out_[from].begin(), out_[from].end(), to), to);
  in_[to].insert(std::lower_bound(in_[to].begin(), in_[to].end(), from), from);
}

bool Graph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (const auto& s : out_) m += s.size();
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : out_[i]) e.emplace_back(i, j);
  }
  return e;
}

bool operator==(const Graph& a, const Graph& b) { return a.out_ == b.out_; }

std::vector<bool> SccDecomposition::cyclic_nodes() const {
  std::vector<bool> mask(component_of.size(), false);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!nontrivial[c]) continue;
    for (std::size_t v : components[c]) mask[v] = true;
  }
  return mask;
}

// Tarjan's algorithm with an explicit stack.
SccDecomposition scc(const Graph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;

  SccDecomposition out;
  out.component_of.assign(n, 0);

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const std::size_t w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      const bool cyclic = comp.size() > 1 || g.has_edge(v, v);
      for (std::size_t u : comp) out.component_of[u] = out.components.size();
      out.components.push_back(std::move(comp));
      out.nontrivial.push_back(cyclic);
    }
  }
  return out;
}

bool strongly_connected(const Graph& g) {
  if (g.size() == 0) return false;
  return scc(g).count() == 1;
}

std::vector<bool> reachable(const Graph& g, std::size_t from) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

Path shortest_path(const Graph& g, std::size_t from, std::size_t to, const std::vector<bool>* allowed) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  auto ok = [&](std::size_t v) { return allowed == nullptr || (*allowed)[v]; };
  if (!ok(from) || !ok(to)) return {};
  if (from == to) return Path{{from}};
  std::vector<std::size_t> parent(g.size(), kNone);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(v)) {
      if (parent[w] != kNone || !ok(w)) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<std::size_t> nodes{to};
        for (std::size_t u = to; u != from; u = parent[u]) nodes.push_back(parent[u]);
        std::reverse(nodes.begin(), nodes.end());
        return Path{std::move(nodes)};
      }
      queue.push_back(w);
    }
  }
  return {};
}

Path find_cycle(const Graph& g, const std::vector<bool>* allowed) {
  auto ok = [&](std::size_t v) { return allowed == nullptr || (*allowed)[v]; };
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!ok(v)) continue;
    if (g.has_edge(v, v)) return Path{{v, v}};
  }
  // Close the first edge (u,v) whose head reaches back to its tail.
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!ok(u)) continue;
    for (std::size_t v : g.successors(u)) {
      if (v == u || !ok(v)) continue;
      Path back = shortest_path(g, v, u, allowed);
      if (back.empty()) continue;
      std::vector<std::size_t> nodes{u};
      nodes.insert(nodes.end(), back.nodes.begin(), back.nodes.end());
      return canonical_cycle(Path{std::move(nodes)});
    }
  }
  return {};
}

std::size_t graph_cyclicity(const Graph& g, const std::vector<bool>* nodes) {
  const std::size_t n = g.size();
  Graph sub(n);
  auto in = [&](std::size_t v) { return nodes == nullptr || (*nodes)[v]; };
  for (const auto& [i, j] : g.edges()) {
    if (in(i) && in(j)) sub.add_edge(i, j);
  }
  const SccDecomposition d = scc(sub);
  std::size_t result = 1;
  bool any = false;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (std::size_t c = 0; c < d.count(); ++c) {
    const auto& comp = d.components[c];
    if (!in(comp.front())) continue;
    if (!d.nontrivial[c]) {
      throw PreconditionError("graph_cyclicity: node " + std::to_string(comp.front() + 1) +
                              " lies on no cycle");
    }
    // BFS levels inside the component; every internal edge u->v closes a
    // discrepancy level(u)+1-level(v), and the gcd of those is the cyclicity.
    std::vector<std::size_t> level(n, kUnseen);
    std::deque<std::size_t> queue{comp.front()};
    level[comp.front()] = 0;
    std::size_t g_comp = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : sub.successors(v)) {
        if (d.component_of[w] != c) continue;
        if (level[w] == kUnseen) {
          level[w] = level[v] + 1;
          queue.push_back(w);
        } else {
          const long diff = static_cast<long>(level[v]) + 1 - static_cast<long>(level[w]);
          g_comp = std::gcd(g_comp, static_cast<std::size_t>(diff < 0 ? -diff : diff));
        }
      }
    }
    result = std::lcm(result, g_comp);
    any = true;
  }
  if (!any) throw PreconditionError("graph_cyclicity: no cycles");
  return result;
}

namespace {

void extend_cycles(const Graph& g, std::size_t start, std::size_t max_len, std::vector<std::size_t>& trail,
                   std::vector<bool>& on_trail, std::vector<Path>& out) {
  const std::size_t v = trail.back();
  for (std::size_t w : g.successors(v)) {
    if (w < start) continue;
    if (w == start) {
      std::vector<std::size_t> nodes = trail;
      nodes.push_back(start);
      out.push_back(Path{std::move(nodes)});
      continue;
    }
    if (on_trail[w] || trail.size() >= max_len) continue;
    on_trail[w] = true;
    trail.push_back(w);
    extend_cycles(g, start, max_len, trail, on_trail, out);
    trail.pop_back();
    on_trail[w] = false;
  }
}

}  // namespace

std::vector<Path> elementary_cycles(const Graph& g, std::size_t max_len, std::size_t max_nodes) {
  if (g.size() > max_nodes) {
    throw BudgetExceeded("cycle enumeration limited to " + std::to_string(max_nodes) + " nodes, got " +
                         std::to_string(g.size()));
  }
  std::vector<Path> out;
  std::vector<bool> on_trail(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<std::size_t> trail{s};
    on_trail[s] = true;
    extend_cycles(g, s, max_len, trail, on_trail, out);
    on_trail[s] = false;
  }
  return out;
}

}  // namespace maxalg
