#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "maxalg/error.hpp"

namespace maxalg {

// Node sequence i1 -> i2 -> ... -> ik. A cycle is a closed path (first node
// repeated at the end), so its length equals its number of edges.
struct Path {
  std::vector<std::size_t> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  bool empty() const { return nodes.empty(); }
  bool closed() const { return nodes.size() >= 2 && nodes.front() == nodes.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

// 1-based "1->2->1" rendering used in reports.
std::string format_path(const Path& path);

// Rotates a closed path so that it starts at its smallest node.
Path canonical_cycle(const Path& cycle);

// Why a max-algebraic existence question has a negative answer: a cycle and its
// weight in the matrix the question was asked about.
template <class S>
struct Obstruction {
  Path cycle;
  S weight;
};

// Either a value or the cycle that rules one out.
template <class V, class S>
class Solvable {
 public:
  Solvable(V value) : state_(std::move(value)) {}
  Solvable(Obstruction<S> obstruction) : state_(std::move(obstruction)) {}

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const V& value() const {
    if (!ok()) throw PreconditionError("no value: the answer is negative");
    return std::get<0>(state_);
  }
  const Obstruction<S>& obstruction() const {
    if (ok()) throw PreconditionError("no obstruction: the answer is positive");
    return std::get<1>(state_);
  }

 private:
  std::variant<V, Obstruction<S>> state_;
};

}  // namespace maxalg
