#pragma once

#include <array>
#include <string>
#include <vector>

#include "treedim/generators.hpp"
#include "treedim/oracle.hpp"
#include "treedim/topology.hpp"
#include "treedim/tree.hpp"

namespace treedim::testing {

// Named fixtures shared by unit and acceptance tests.
WeightedTree star_k13();                       // center 0, leaves 1..3
WeightedTree spider_222();                     // center 0, legs 0-1-2, 0-3-4, 0-5-6
WeightedTree caterpillar6();                   // 0-1-2-3, leaf 4 on 1, leaf 5 on 2
WeightedTree t_minor1();                       // 0 ~ leaf 1, spider centers 2 (3,4,5) and 6 (7,8,9)
WeightedTree t_mod();                          // core 0, legs 1-2 and 3-4, modified 5 -> 6 -> {7, 8}
WeightedTree path_tree(VertexId n);            // 0-1-...-(n-1), unit costs
WeightedTree with_costs(const WeightedTree& tree, std::vector<Cost> costs);

/// Random relabeling of an edge list over [0, n).
std::vector<Edge> relabel(VertexId n, const std::vector<Edge>& edges, Rng& rng);

/// Visits every labeled tree on n vertices (n^(n-2) of them for n >= 2).
template <typename Fn>
void for_each_labeled_tree(VertexId n, Fn&& fn) {
  if (n <= 2) {
    fn(n == 1 ? std::vector<Edge>{} : std::vector<Edge>{{0, 1}});
    return;
  }
  std::vector<VertexId> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    fn(prufer_decode(seq, n));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

enum class Bucket { Tiny, Path, SingleSmallCore, TwoSmallCores, HasRegularCore, ModifiedLeg, MinorFewLegs, MinorDegree4 };
inline constexpr std::size_t kBucketCount = 8;
std::string bucket_name(Bucket b);
std::vector<Bucket> buckets_of(const WeightedTree& tree, const Topology& topo);

/// Structured generators for the rarer shapes, relabeled at random and with
/// random rational costs. Every result has at most `max_n` vertices.
WeightedTree steered_instance(Bucket target, Rng& rng, VertexId max_n = 14);

struct RandomizedSuite {
  std::vector<WeightedTree> trees;
  std::array<int, kBucketCount> bucket_counts{};
};

/// `prufer_count` uniform trees with n in [lo, hi] and random costs, then
/// steered instances until every bucket holds at least `bucket_target`.
RandomizedSuite randomized_suite(std::uint64_t seed, int prufer_count, VertexId lo, VertexId hi, int bucket_target);

/// Second brute-force path: subsets by increasing size, checked with
/// verify_landmark; returns the minimum cost.
Cost reference_min_cost(const WeightedTree& tree, ModelKind model);

}  // namespace treedim::testing
