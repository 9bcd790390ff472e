#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treedim/cost.hpp"

namespace treedim {

/// Dense zero-based vertex index.
using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class TreeErrorKind { NotATree, NegativeCost, IndexOutOfRange };

/// Raised when an input does not describe a valid vertex-weighted tree.
/// `edge` or `vertex` (or both) point at the offending item, -1 otherwise.
class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, std::string what, long edge = -1, long vertex = -1)
      : std::runtime_error(std::move(what)), kind_(kind), edge_(edge), vertex_(vertex) {}

  TreeErrorKind kind() const { return kind_; }
  long edge() const { return edge_; }
  long vertex() const { return vertex_; }

 private:
  TreeErrorKind kind_;
  long edge_;
  long vertex_;
};

/// Immutable tree with exact vertex costs. Adjacency is stored in CSR form,
/// each neighbor list sorted by id; edges are normalized to (min, max) and
/// sorted lexicographically.
class WeightedTree {
 public:
  VertexId size() const { return static_cast<VertexId>(costs_.size()); }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  const Cost& cost(VertexId v) const { return costs_[v]; }
  const std::vector<Cost>& costs() const { return costs_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  friend WeightedTree build_tree(VertexId n, std::vector<Edge> edges, std::vector<Cost> costs);

  std::vector<Cost> costs_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// Validates and builds a tree. Throws TreeError on cycles, disconnection,
/// wrong edge count, self-loops, duplicate edges or out-of-range endpoints.
WeightedTree build_tree(VertexId n, std::vector<Edge> edges, std::vector<Cost> costs);

/// Convenience overload with every cost equal to 1.
WeightedTree build_unit_tree(VertexId n, std::vector<Edge> edges);

/// Hop distances from `src` to every vertex.
std::vector<int> bfs_distances(const WeightedTree& tree, VertexId src);

/// Exact sum of the costs of `subset`.
Cost total_cost(const WeightedTree& tree, std::span<const VertexId> subset);

}  // namespace treedim
