#include "treedim/tree.hpp"

#include <algorithm>
#include <numeric>

namespace treedim {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(VertexId n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

std::string edge_label(std::size_t index, const Edge& e) {
  return "edge " + std::to_string(index) + " (" + std::to_string(e.first) + "," +
         std::to_string(e.second) + ")";
}

}  // namespace

WeightedTree build_tree(VertexId n, std::vector<Edge> edges, std::vector<Cost> costs) {
  if (n < 1) throw TreeError(TreeErrorKind::NotATree, "a tree needs at least one vertex");
  if (costs.size() != static_cast<std::size_t>(n)) {
    throw TreeError(TreeErrorKind::IndexOutOfRange,
                    "expected " + std::to_string(n) + " costs, got " + std::to_string(costs.size()));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw TreeError(TreeErrorKind::IndexOutOfRange,
                      edge_label(i, edges[i]) + " has an endpoint outside [0, " +
                          std::to_string(n) + ")",
                      static_cast<long>(i), a < 0 || a >= n ? a : b);
    }
    if (a == b) {
      throw TreeError(TreeErrorKind::NotATree, edge_label(i, edges[i]) + " is a self-loop",
                      static_cast<long>(i), a);
    }
  }

  DisjointSets sets(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!sets.unite(edges[i].first, edges[i].second)) {
      throw TreeError(TreeErrorKind::NotATree, edge_label(i, edges[i]) + " closes a cycle",
                      static_cast<long>(i));
    }
  }
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    // Acyclic with too few edges: report a vertex outside the component of 0.
    long stray = -1;
    for (VertexId v = 1; v < n && stray < 0; ++v) {
      if (sets.find(v) != sets.find(0)) stray = v;
    }
    throw TreeError(TreeErrorKind::NotATree,
                    "expected n-1 = " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()) + "; vertex " + std::to_string(stray) +
                        " is disconnected",
                    -1, stray);
  }

  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());

  WeightedTree tree;
  tree.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : edges) {
    ++tree.offsets_[a + 1];
    ++tree.offsets_[b + 1];
  }
  std::partial_sum(tree.offsets_.begin(), tree.offsets_.end(), tree.offsets_.begin());
  tree.adjacency_.resize(2 * edges.size());
  std::vector<std::int64_t> fill(tree.offsets_.begin(), tree.offsets_.end() - 1);
  // With edges sorted as (min, max) pairs, each list receives its smaller
  // neighbors first and then its larger ones, both ascending.
  for (const auto& [a, b] : edges) {
    tree.adjacency_[fill[a]++] = b;
    tree.adjacency_[fill[b]++] = a;
  }
  tree.edges_ = std::move(edges);
  tree.costs_ = std::move(costs);
  return tree;
}

WeightedTree build_unit_tree(VertexId n, std::vector<Edge> edges) {
  return build_tree(n, std::move(edges), std::vector<Cost>(static_cast<std::size_t>(std::max<VertexId>(n, 0)), Cost(1)));
}

std::vector<int> bfs_distances(const WeightedTree& tree, VertexId src) {
  std::vector<int> dist(static_cast<std::size_t>(tree.size()), -1);
  std::vector<VertexId> queue;
  queue.reserve(dist.size());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const VertexId w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Cost total_cost(const WeightedTree& tree, std::span<const VertexId> subset) {
  Cost sum;
  for (const VertexId v : subset) sum += tree.cost(v);
  return sum;
}

}  // namespace treedim
