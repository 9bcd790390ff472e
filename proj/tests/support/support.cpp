#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace treedim::testing {

WeightedTree star_k13() { return build_unit_tree(4, star_edges(4)); }

WeightedTree spider_222() {
  const int legs[] = {2, 2, 2};
  return build_unit_tree(7, spider_edges(legs));
}

WeightedTree caterpillar6() { return build_unit_tree(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}); }

WeightedTree t_minor1() {
  return build_unit_tree(10, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {2, 5}, {0, 6}, {6, 7}, {6, 8}, {6, 9}});
}

WeightedTree t_mod() {
  return build_unit_tree(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}, {6, 8}});
}

WeightedTree path_tree(VertexId n) { return build_unit_tree(n, path_edges(n)); }

WeightedTree with_costs(const WeightedTree& tree, std::vector<Cost> costs) {
  return build_tree(tree.size(), tree.edges(), std::move(costs));
}

std::vector<Edge> relabel(VertexId n, const std::vector<Edge>& edges, Rng& rng) {
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.emplace_back(perm[a], perm[b]);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::string bucket_name(Bucket b) {
  switch (b) {
    case Bucket::Tiny: return "tiny";
    case Bucket::Path: return "path";
    case Bucket::SingleSmallCore: return "single_small_core";
    case Bucket::TwoSmallCores: return "two_small_cores";
    case Bucket::HasRegularCore: return "has_regular_core";
    case Bucket::ModifiedLeg: return "modified_leg";
    case Bucket::MinorFewLegs: return "minor_core_le1_gleg";
    case Bucket::MinorDegree4: return "minor_core_degree4";
  }
  return "?";
}

std::vector<Bucket> buckets_of(const WeightedTree& tree, const Topology& topo) {
  std::vector<Bucket> out;
  switch (topo.case_tag) {
    case CaseTag::Tiny: out.push_back(Bucket::Tiny); break;
    case CaseTag::Path: out.push_back(Bucket::Path); break;
    case CaseTag::SingleSmallCore: out.push_back(Bucket::SingleSmallCore); break;
    case CaseTag::TwoSmallCores: out.push_back(Bucket::TwoSmallCores); break;
    case CaseTag::HasRegularCore: out.push_back(Bucket::HasRegularCore); break;
  }
  if (topo.case_tag != CaseTag::HasRegularCore) return out;
  bool modified = false;
  bool few = false;
  bool degree4 = false;
  for (const auto& core : topo.cores) {
    const VertexClass c = topo.classes[core.id];
    if (!is_regular_core(c)) continue;
    for (const auto& leg : core.glegs) modified = modified || leg.kind == LegKind::Modified;
    if (c == VertexClass::MinorCore) {
      if (core.glegs.size() <= 1) few = true;
      else if (tree.degree(core.id) >= 4) degree4 = true;
    }
  }
  if (modified) out.push_back(Bucket::ModifiedLeg);
  if (few) out.push_back(Bucket::MinorFewLegs);
  if (degree4) out.push_back(Bucket::MinorDegree4);
  return out;
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Incremental edge-list builder.
struct Builder {
  VertexId n = 1;  // vertex 0 exists
  std::vector<Edge> edges;

  VertexId add(VertexId parent) {
    edges.emplace_back(parent, n);
    return n++;
  }
  VertexId chain(VertexId from, int len) {
    for (int i = 0; i < len; ++i) from = add(from);
    return from;
  }
  // Hangs a regular core off `at`, directly or through one path vertex.
  void regular_subtree(VertexId at, Rng& rng) {
    const int gap = uniform(rng, 0, 3) == 0 ? 1 : 0;
    const VertexId center = chain(at, 1 + gap);
    if (uniform(rng, 0, 1) == 0) {
      for (int i = 0; i < 3; ++i) add(center);  // degree 4, three short legs
    } else {
      chain(center, 2);  // degree 3, two long legs: no short leg
      chain(center, 2);
    }
  }
};

std::optional<std::vector<Edge>> structured(Bucket target, Rng& rng, VertexId& n_out) {
  Builder b;
  switch (target) {
    case Bucket::Tiny:
      b.n = static_cast<VertexId>(uniform(rng, 1, 2));
      if (b.n == 2) b.edges.emplace_back(0, 1);
      break;
    case Bucket::Path:
      b.n = static_cast<VertexId>(uniform(rng, 3, 14));
      b.edges = path_edges(b.n);
      break;
    case Bucket::SingleSmallCore: {
      std::array<int, 3> legs{1, uniform(rng, 1, 5), uniform(rng, 1, 5)};
      b.edges = spider_edges(legs);
      b.n = 1 + legs[0] + legs[1] + legs[2];
      break;
    }
    case Bucket::TwoSmallCores: {
      const int interior = uniform(rng, 0, 4);
      const int ul = uniform(rng, 1, 4);
      const int vl = uniform(rng, 1, 4);
      b.edges = double_spider_edges(interior, ul, vl);
      b.n = 4 + interior + ul + vl;
      break;
    }
    case Bucket::HasRegularCore:
    case Bucket::ModifiedLeg: {
      // Regular core 0 with standard legs and one modified leg.
      const bool wide = uniform(rng, 0, 1) == 0;
      if (wide) {
        b.chain(0, uniform(rng, 1, 3));
        b.chain(0, uniform(rng, 1, 3));
        b.chain(0, uniform(rng, 1, 2));
      } else {
        b.chain(0, uniform(rng, 2, 3));
        b.chain(0, uniform(rng, 2, 3));
      }
      const VertexId small = b.chain(0, 1 + uniform(rng, 0, 2));
      b.add(small);
      b.chain(small, uniform(rng, 1, 3));
      break;
    }
    case Bucket::MinorFewLegs: {
      const int shape = uniform(rng, 0, 3);
      switch (shape) {
        case 0: break;  // no g-leg at all
        case 1: b.add(0); break;
        case 2: b.chain(0, 2); break;
        default: {
          const VertexId small = b.chain(0, uniform(rng, 1, 2));
          b.add(small);
          b.add(small);
        }
      }
      b.regular_subtree(0, rng);
      b.regular_subtree(0, rng);
      if (shape == 0) b.regular_subtree(0, rng);
      break;
    }
    case Bucket::MinorDegree4: {
      b.add(0);
      b.chain(0, uniform(rng, 1, 2));
      b.regular_subtree(0, rng);
      b.regular_subtree(0, rng);
      break;
    }
  }
  if (b.n > 14) return std::nullopt;
  n_out = b.n;
  return b.edges;
}

}  // namespace

WeightedTree steered_instance(Bucket target, Rng& rng, VertexId max_n) {
  while (true) {
    VertexId n = 0;
    auto edges = structured(target, rng, n);
    if (!edges || n > max_n) continue;
    auto mixed = relabel(n, *edges, rng);
    return build_tree(n, std::move(mixed), random_costs(n, rng));
  }
}

RandomizedSuite randomized_suite(std::uint64_t seed, int prufer_count, VertexId lo, VertexId hi, int bucket_target) {
  Rng rng(seed);
  RandomizedSuite suite;
  auto record = [&](WeightedTree tree) {
    for (const Bucket b : buckets_of(tree, classify(tree))) ++suite.bucket_counts[static_cast<std::size_t>(b)];
    suite.trees.push_back(std::move(tree));
  };
  for (int i = 0; i < prufer_count; ++i) {
    const auto n = static_cast<VertexId>(uniform(rng, lo, hi));
    record(build_tree(n, random_tree_edges(n, rng), random_costs(n, rng)));
  }
  for (int guard = 0; guard < 100000; ++guard) {
    const auto it = std::min_element(suite.bucket_counts.begin(), suite.bucket_counts.end());
    if (*it >= bucket_target) break;
    record(steered_instance(static_cast<Bucket>(it - suite.bucket_counts.begin()), rng));
  }
  return suite;
}

Cost reference_min_cost(const WeightedTree& tree, ModelKind model) {
  const VertexId n = tree.size();
  std::optional<Cost> best;
  for (VertexId size = 0; size <= n; ++size) {
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + size, 1);
    do {
      std::vector<VertexId> set;
      for (VertexId v = 0; v < n; ++v) {
        if (pick[v]) set.push_back(v);
      }
      if (verify_landmark(tree, set, model, 1).valid) {
        const Cost c = total_cost(tree, set);
        if (!best || c < *best) best = c;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (!best) throw std::logic_error("no landmark set exists");
  return *best;
}

}  // namespace treedim::testing
