#include "maxalg/path.hpp"

#include <algorithm>

namespace maxalg {

std::string format_path(const Path& path) {
  std::string out;
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    if (k > 0) out += "->";
    out += std::to_string(path.nodes[k] + 1);
  }
  return out;
}

Path canonical_cycle(const Path& cycle) {
  if (!cycle.closed()) return cycle;
  std::vector<std::size_t> ring(cycle.nodes.begin(), cycle.nodes.end() - 1);
  std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
  ring.push_back(ring.front());
  return Path{std::move(ring)};
}

}  // namespace maxalg
