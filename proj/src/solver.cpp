#include "treedim/solver.hpp"

#include <algorithm>
#include <cassert>
#include <span>

namespace treedim {
namespace {

using TypeVector = std::vector<SolutionType>;

struct CoreTables {
  std::span<const GLeg> legs;
  std::vector<LegSolutionTable> tables;

  CoreTables(const CoreInfo& core, const WeightedTree& tree) : legs(core.glegs) {
    tables.reserve(legs.size());
    for (const auto& leg : legs) tables.push_back(min_cost_solutions(leg, tree));
  }

  const LegChoice& choice(std::size_t leg, SolutionType t) const {
    const auto& c = tables[leg][t];
    assert(c.has_value());
    return *c;
  }

  /// Cheapest available type among `candidates`, earlier entries winning ties.
  SolutionType cheapest(std::size_t leg, std::initializer_list<SolutionType> candidates) const {
    SolutionType best = SolutionType::Invalid;
    for (const SolutionType t : candidates) {
      const auto& c = tables[leg][t];
      if (!c) continue;
      if (best == SolutionType::Invalid || c->cost < choice(leg, best).cost) best = t;
    }
    return best;
  }

  Cost cost_of(const TypeVector& types) const {
    Cost sum;
    for (std::size_t l = 0; l < types.size(); ++l) sum += choice(l, types[l]).cost;
    return sum;
  }

  LocalSetAssignment materialize(VertexId core, const TypeVector& types) const {
    LocalSetAssignment a;
    a.core = core;
    a.legs.reserve(types.size());
    for (std::size_t l = 0; l < types.size(); ++l) {
      const LegChoice& c = choice(l, types[l]);
      TypedLegSolution s;
      s.leg_index = l;
      s.root = legs[l].root;
      s.kind = legs[l].kind;
      s.vertices.assign(c.vertices().begin(), c.vertices().end());
      s.type = types[l];
      s.cost = c.cost;
      a.legs.push_back(std::move(s));
    }
    return a;
  }
};

// Keeps the first strictly cheapest candidate.
struct Cheapest {
  std::optional<TypeVector> types;
  Cost cost;

  void offer(TypeVector candidate, const Cost& candidate_cost) {
    if (!types || candidate_cost < cost) {
      types = std::move(candidate);
      cost = candidate_cost;
    }
  }
};

// (cost, lexicographic id list) order used for pool-style candidates.
bool better_set(const Cost& cost, const std::vector<VertexId>& set, const Cost& best_cost,
                const std::vector<VertexId>& best_set) {
  const auto c = cost <=> best_cost;
  if (c != 0) return c < 0;
  return set < best_set;
}

std::size_t max_cost_leg(const CoreTables& t, LegKind kind, SolutionType type) {
  std::size_t best = t.legs.size();
  for (std::size_t l = 0; l < t.legs.size(); ++l) {
    if (t.legs[l].kind != kind) continue;
    if (best == t.legs.size() || t.choice(best, type).cost < t.choice(l, type).cost) best = l;
  }
  return best;
}

}  // namespace

LocalSetAssignment best_local_set_regular(const Topology& topo, const WeightedTree& tree, VertexId core) {
  const CoreTables t(topo.core(core), tree);
  const std::size_t m = t.legs.size();
  if (m == 0) return LocalSetAssignment{core, {}};

  Cheapest best;
  bool has_short = false;
  bool has_long = false;

  // Every g-leg on its own cheapest non-empty type.
  TypeVector independent(m);
  for (std::size_t l = 0; l < m; ++l) {
    switch (t.legs[l].kind) {
      case LegKind::ShortStandard:
        independent[l] = SolutionType::S3;
        has_short = true;
        break;
      case LegKind::LongStandard:
        independent[l] = t.cheapest(l, {SolutionType::S3, SolutionType::S1, SolutionType::S2});
        has_long = true;
        break;
      case LegKind::Modified:
        independent[l] = t.cheapest(l, {SolutionType::M1, SolutionType::M2, SolutionType::M3});
        break;
    }
  }
  best.offer(independent, t.cost_of(independent));

  // The most expensive short leg left empty.
  if (has_short) {
    TypeVector types(m);
    for (std::size_t l = 0; l < m; ++l) {
      switch (t.legs[l].kind) {
        case LegKind::ShortStandard: types[l] = SolutionType::S3; break;
        case LegKind::LongStandard: types[l] = t.cheapest(l, {SolutionType::S3, SolutionType::S2}); break;
        case LegKind::Modified: types[l] = t.cheapest(l, {SolutionType::M2, SolutionType::M3}); break;
      }
    }
    types[max_cost_leg(t, LegKind::ShortStandard, SolutionType::S3)] = SolutionType::S0;
    const Cost c = t.cost_of(types);
    best.offer(std::move(types), c);
  }

  // The long leg with the most expensive pair left empty.
  if (has_long) {
    TypeVector types(m);
    for (std::size_t l = 0; l < m; ++l) {
      switch (t.legs[l].kind) {
        case LegKind::ShortStandard: types[l] = SolutionType::S3; break;
        case LegKind::LongStandard: types[l] = SolutionType::S2; break;
        case LegKind::Modified: types[l] = t.cheapest(l, {SolutionType::M2, SolutionType::M3}); break;
      }
    }
    types[max_cost_leg(t, LegKind::LongStandard, SolutionType::S2)] = SolutionType::S0;
    const Cost c = t.cost_of(types);
    best.offer(std::move(types), c);
  }

  return t.materialize(core, *best.types);
}

LandmarkResult solve_general(const Topology& topo, const WeightedTree& tree) {
  LandmarkResult result;
  result.case_tag = CaseTag::HasRegularCore;
  for (const auto& info : topo.cores) {
    if (!is_regular_core(topo.classes[info.id])) continue;
    auto assignment = best_local_set_regular(topo, tree, info.id);
    for (const auto& leg : assignment.legs) {
      result.landmarks.insert(result.landmarks.end(), leg.vertices.begin(), leg.vertices.end());
      result.cost += leg.cost;
    }
    result.explanation.push_back(std::move(assignment));
  }
  std::sort(result.landmarks.begin(), result.landmarks.end());
  return result;
}

LandmarkResult solve_single_small_core(const Topology& topo, const WeightedTree& tree) {
  const auto smalls = topo.small_cores();
  const VertexId core = smalls.at(0);
  const CoreTables t(topo.core(core), tree);
  const std::size_t m = t.legs.size();

  std::vector<TypeVector> candidates;
  {
    TypeVector independent(m);
    for (std::size_t l = 0; l < m; ++l) {
      independent[l] = t.legs[l].kind == LegKind::ShortStandard
                           ? SolutionType::S3
                           : t.cheapest(l, {SolutionType::S3, SolutionType::S1, SolutionType::S2});
    }
    candidates.push_back(std::move(independent));
  }
  for (std::size_t empty = 0; empty < m; ++empty) {
    if (t.legs[empty].kind == LegKind::LongStandard) {
      TypeVector types(m);
      for (std::size_t l = 0; l < m; ++l) {
        types[l] = t.legs[l].kind == LegKind::ShortStandard ? SolutionType::S3 : SolutionType::S2;
      }
      types[empty] = SolutionType::S0;
      candidates.push_back(std::move(types));
      continue;
    }
    // Short leg left empty: every S2/S3 combination over the long legs.
    std::vector<std::size_t> longs;
    for (std::size_t l = 0; l < m; ++l) {
      if (t.legs[l].kind == LegKind::LongStandard) longs.push_back(l);
    }
    for (unsigned combo = 0; combo < (1u << longs.size()); ++combo) {
      TypeVector types(m, SolutionType::S3);
      types[empty] = SolutionType::S0;
      for (std::size_t j = 0; j < longs.size(); ++j) {
        types[longs[j]] = (combo >> j) & 1u ? SolutionType::S2 : SolutionType::S3;
      }
      candidates.push_back(std::move(types));
    }
  }

  // Cost ties go to the lexicographically smallest landmark list.
  std::optional<LocalSetAssignment> best;
  std::vector<VertexId> best_landmarks;
  Cost best_cost;
  bool best_adds_core = false;
  for (const TypeVector& types : candidates) {
    int selected = 0;
    int short_singletons = 0;
    for (std::size_t l = 0; l < m; ++l) {
      selected += t.choice(l, types[l]).count;
      if (t.legs[l].kind == LegKind::ShortStandard && types[l] == SolutionType::S3) ++short_singletons;
    }
    // Two selected vertices separate everything only if they are the
    // vertices of two short legs; otherwise the core joins the set.
    const bool adds_core = selected == 2 && short_singletons != 2;
    Cost cost = t.cost_of(types);
    if (adds_core) cost += tree.cost(core);
    if (best && best_cost < cost) continue;
    auto assignment = t.materialize(core, types);
    auto landmarks = assignment.vertices();
    if (adds_core) {
      landmarks.push_back(core);
      std::sort(landmarks.begin(), landmarks.end());
    }
    if (!best || cost < best_cost || landmarks < best_landmarks) {
      best = std::move(assignment);
      best_landmarks = std::move(landmarks);
      best_cost = cost;
      best_adds_core = adds_core;
    }
  }

  LandmarkResult result;
  result.case_tag = CaseTag::SingleSmallCore;
  result.landmarks = std::move(best_landmarks);
  if (best_adds_core) result.added_core_vertex = core;
  result.cost = best_cost;
  result.explanation.push_back(std::move(*best));
  return result;
}

LandmarkResult solve_two_small_cores(const Topology& topo, const WeightedTree& tree) {
  const auto smalls = topo.small_cores();
  const VertexId u = smalls.at(0);
  const VertexId v = smalls.at(1);
  const CoreInfo& cu = topo.core(u);
  const CoreInfo& cv = topo.core(v);

  auto cheaper = [&](VertexId a, VertexId b) {
    const auto c = tree.cost(a) <=> tree.cost(b);
    return c != 0 ? c < 0 : a < b;
  };

  std::vector<VertexId> pool{u, v};
  auto collect = [&](const CoreInfo& core) {
    for (const GLeg& leg : core.glegs) {
      if (leg.kind == LegKind::Modified) continue;
      pool.push_back(leg.vertices.front());
      if (leg.kind != LegKind::LongStandard) continue;
      std::vector<VertexId> deeper(leg.vertices.begin() + 1, leg.vertices.end());
      const std::size_t keep = std::min<std::size_t>(2, deeper.size());
      std::partial_sort(deeper.begin(), deeper.begin() + static_cast<std::ptrdiff_t>(keep), deeper.end(), cheaper);
      pool.insert(pool.end(), deeper.begin(), deeper.begin() + static_cast<std::ptrdiff_t>(keep));
    }
  };
  collect(cu);
  collect(cv);
  // Cheapest interior vertex of the u-v path (seen from u's modified leg).
  for (const GLeg& leg : cu.glegs) {
    if (leg.kind != LegKind::Modified) continue;
    VertexId interior = -1;
    for (std::size_t j = 0; j < leg.vertices.size(); ++j) {
      if (leg.positions[j] < leg.small_core_position && (interior < 0 || cheaper(leg.vertices[j], interior))) {
        interior = leg.vertices[j];
      }
    }
    if (interior >= 0) pool.push_back(interior);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Where each pool vertex sits on the g-legs of u and of v.
  struct Slot {
    int leg = -1;
    int position = 0;
  };
  const std::array<const CoreInfo*, 2> sides{&cu, &cv};
  std::vector<std::array<Slot, 2>> slots(pool.size());
  for (std::size_t side = 0; side < 2; ++side) {
    const auto& legs = sides[side]->glegs;
    for (std::size_t l = 0; l < legs.size(); ++l) {
      for (std::size_t j = 0; j < legs[l].vertices.size(); ++j) {
        const auto it = std::lower_bound(pool.begin(), pool.end(), legs[l].vertices[j]);
        if (it != pool.end() && *it == legs[l].vertices[j]) {
          slots[static_cast<std::size_t>(it - pool.begin())][side] = {static_cast<int>(l), legs[l].positions[j]};
        }
      }
    }
  }

  std::optional<std::vector<VertexId>> best;
  Cost best_cost;
  const std::uint32_t limit = 1u << pool.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool local_both = true;
    for (std::size_t side = 0; side < 2 && local_both; ++side) {
      const auto& legs = sides[side]->glegs;
      std::vector<LegSelectionProfile> profiles(legs.size());
      for (std::size_t p = 0; p < pool.size(); ++p) {
        if (!((mask >> p) & 1u) || slots[p][side].leg < 0) continue;
        const GLeg& leg = legs[static_cast<std::size_t>(slots[p][side].leg)];
        auto& prof = profiles[static_cast<std::size_t>(slots[p][side].leg)];
        ++prof.size;
        if (leg.kind == LegKind::Modified) {
          prof.has_ell = prof.has_ell || pool[p] == leg.ell_a || pool[p] == leg.ell_b;
          if (slots[p][side].position >= leg.small_core_position + 2) ++prof.beyond_ell;
        } else if (slots[p][side].position == 1) {
          prof.has_position_one = true;
        }
      }
      std::vector<LegKind> kinds;
      std::vector<SolutionType> types;
      for (std::size_t l = 0; l < legs.size(); ++l) {
        kinds.push_back(legs[l].kind);
        types.push_back(type_from_profile(legs[l].kind, profiles[l]));
      }
      local_both = local_set_violations(kinds, types).empty();
    }
    if (!local_both) continue;

    std::vector<VertexId> set;
    Cost cost;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if ((mask >> p) & 1u) {
        set.push_back(pool[p]);
        cost += tree.cost(pool[p]);
      }
    }
    if (!best || better_set(cost, set, best_cost, *best)) {
      best = std::move(set);
      best_cost = cost;
    }
  }

  LandmarkResult result;
  result.case_tag = CaseTag::TwoSmallCores;
  result.landmarks = best.value();
  result.cost = best_cost;
  return result;
}

LandmarkResult solve_path(const WeightedTree& tree) {
  const VertexId n = tree.size();
  VertexId start = 0;
  while (tree.degree(start) != 1) ++start;
  std::vector<VertexId> order{start};
  order.reserve(static_cast<std::size_t>(n));
  VertexId prev = -1;
  VertexId cur = start;
  while (static_cast<VertexId>(order.size()) < n) {
    for (const VertexId w : tree.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    order.push_back(cur);
  }

  std::vector<std::vector<VertexId>> candidates{
      {order[0], order[1]},
      {order[n - 2], order[n - 1]},
      {order[0], order[n - 1]},
  };
  if (n == 4) candidates.push_back({order[1], order[2]});  // both middle vertices
  std::vector<VertexId> by_cost(order);
  std::partial_sort(by_cost.begin(), by_cost.begin() + 3, by_cost.end(), [&](VertexId a, VertexId b) {
    const auto c = tree.cost(a) <=> tree.cost(b);
    return c != 0 ? c < 0 : a < b;
  });
  candidates.emplace_back(by_cost.begin(), by_cost.begin() + 3);

  LandmarkResult result;
  result.case_tag = CaseTag::Path;
  bool have = false;
  for (auto& cand : candidates) {
    std::sort(cand.begin(), cand.end());
    const Cost cost = total_cost(tree, cand);
    if (!have || better_set(cost, cand, result.cost, result.landmarks)) {
      result.landmarks = cand;
      result.cost = cost;
      have = true;
    }
  }
  return result;
}

LandmarkResult solve(const WeightedTree& tree, const Topology& topo) {
  switch (topo.case_tag) {
    case CaseTag::Tiny: {
      LandmarkResult result;
      result.case_tag = CaseTag::Tiny;
      if (tree.size() == 2) {
        const VertexId pick = tree.cost(1) < tree.cost(0) ? 1 : 0;
        result.landmarks = {pick};
        result.cost = tree.cost(pick);
      }
      return result;
    }
    case CaseTag::Path: return solve_path(tree);
    case CaseTag::SingleSmallCore: return solve_single_small_core(topo, tree);
    case CaseTag::TwoSmallCores: return solve_two_small_cores(topo, tree);
    case CaseTag::HasRegularCore: return solve_general(topo, tree);
  }
  return {};
}

LandmarkResult solve(const WeightedTree& tree) { return solve(tree, classify(tree)); }

}  // namespace treedim
