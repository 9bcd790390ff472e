#pragma once

#include <optional>
#include <vector>

#include "treedim/leg_solutions.hpp"
#include "treedim/topology.hpp"

namespace treedim {

/// Minimum-cost landmark set for the NL model with k = 2.
struct LandmarkResult {
  std::vector<VertexId> landmarks;  // ascending
  Cost cost;
  CaseTag case_tag = CaseTag::Tiny;
  /// Per-core choices, ascending by core id. Empty for tiny, path and
  /// two-small-core trees, whose optimum comes from a candidate pool.
  std::vector<LocalSetAssignment> explanation;
  /// Set when a single-small-core solution also selects the core itself.
  std::optional<VertexId> added_core_vertex;
};

/// Cheapest thrifty local set on the g-legs of a regular core.
LocalSetAssignment best_local_set_regular(const Topology& topo, const WeightedTree& tree, VertexId core);

LandmarkResult solve_general(const Topology& topo, const WeightedTree& tree);
LandmarkResult solve_single_small_core(const Topology& topo, const WeightedTree& tree);
LandmarkResult solve_two_small_cores(const Topology& topo, const WeightedTree& tree);
LandmarkResult solve_path(const WeightedTree& tree);

LandmarkResult solve(const WeightedTree& tree);
LandmarkResult solve(const WeightedTree& tree, const Topology& topo);

}  // namespace treedim
