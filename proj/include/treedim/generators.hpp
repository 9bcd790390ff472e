#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "treedim/tree.hpp"

namespace treedim {

using Rng = std::mt19937_64;

// Edge lists for the shapes used throughout tests and the CLI.
std::vector<Edge> path_edges(VertexId n);
std::vector<Edge> star_edges(VertexId n);
/// Center 0; legs numbered consecutively outward, one leg after another.
std::vector<Edge> spider_edges(std::span<const int> leg_lengths);
/// Center 0 with three legs whose lengths differ by at most one.
std::vector<Edge> spider_edges(VertexId n);
/// Spine 0..s-1 with s = (n + 2) / 2; the remaining vertices hang as leaves
/// off the inner spine vertices 1..s-2 in round-robin order.
std::vector<Edge> caterpillar_edges(VertexId n);
/// Two small cores joined by a path, each with one short and one long leg.
std::vector<Edge> double_spider_edges(int interior, int u_long, int v_long);
std::vector<Edge> double_spider_edges(VertexId n);
/// Labeled tree for a Prüfer sequence over [0, n) of length n - 2.
std::vector<Edge> prufer_decode(std::span<const VertexId> sequence, VertexId n);
/// Uniformly random labeled tree.
std::vector<Edge> random_tree_edges(VertexId n, Rng& rng);

std::vector<Cost> unit_costs(VertexId n);
/// p/q with p uniform in [0, 100] and q uniform in {1, 2, 4}.
std::vector<Cost> random_costs(VertexId n, Rng& rng);

enum class GenKind { Path, Star, Spider, Caterpillar, DoubleSpider, Random };

GenKind parse_gen_kind(std::string_view name);

/// Edge list for `kind` on n vertices; throws std::invalid_argument when the
/// shape does not exist for that n.
std::vector<Edge> generate_edges(GenKind kind, VertexId n, Rng& rng);

}  // namespace treedim
