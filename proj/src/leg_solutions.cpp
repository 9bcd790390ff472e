#include "treedim/leg_solutions.hpp"

#include <algorithm>
#include <unordered_map>

namespace treedim {

std::string_view to_string(SolutionType t) {
  switch (t) {
    case SolutionType::S0: return "s0";
    case SolutionType::S1: return "s1";
    case SolutionType::S2: return "s2";
    case SolutionType::S3: return "s3";
    case SolutionType::M1: return "m1";
    case SolutionType::M2: return "m2";
    case SolutionType::M3: return "m3";
    case SolutionType::Invalid: return "invalid";
  }
  return "?";
}

SolutionType type_from_profile(LegKind kind, const LegSelectionProfile& p) {
  if (kind != LegKind::Modified) {
    if (p.size == 0) return SolutionType::S0;
    if (p.size == 1) return p.has_position_one ? SolutionType::S3 : SolutionType::S1;
    return SolutionType::S2;
  }
  if (p.has_ell) return p.size == 1 ? SolutionType::M1 : SolutionType::M3;
  if (p.beyond_ell >= 2) return SolutionType::M2;
  return SolutionType::Invalid;
}

namespace {

void add_to_profile(LegSelectionProfile& p, const GLeg& leg, VertexId v, int position) {
  ++p.size;
  if (leg.kind == LegKind::Modified) {
    if (v == leg.ell_a || v == leg.ell_b) p.has_ell = true;
    if (position >= leg.small_core_position + 2) ++p.beyond_ell;
  } else if (position == 1) {
    p.has_position_one = true;
  }
}

// Strict (cost, id) order used for every "cheapest" selection.
bool cheaper(const WeightedTree& tree, VertexId a, VertexId b) {
  const auto c = tree.cost(a) <=> tree.cost(b);
  if (c != 0) return c < 0;
  return a < b;
}

// Two cheapest vertices among leg.vertices[j] for which keep(j) holds.
template <typename Pred>
std::array<VertexId, 2> two_cheapest(const GLeg& leg, const WeightedTree& tree, Pred keep) {
  std::array<VertexId, 2> best{-1, -1};
  for (std::size_t j = 0; j < leg.vertices.size(); ++j) {
    if (!keep(j)) continue;
    const VertexId v = leg.vertices[j];
    if (best[0] < 0 || cheaper(tree, v, best[0])) {
      best[1] = best[0];
      best[0] = v;
    } else if (best[1] < 0 || cheaper(tree, v, best[1])) {
      best[1] = v;
    }
  }
  return best;
}

LegChoice make_choice(const WeightedTree& tree, std::initializer_list<VertexId> members) {
  LegChoice c;
  for (const VertexId v : members) {
    c.members[static_cast<std::size_t>(c.count++)] = v;
    c.cost += tree.cost(v);
  }
  if (c.count == 2 && c.members[1] < c.members[0]) std::swap(c.members[0], c.members[1]);
  return c;
}

}  // namespace

SolutionType type_of_solution(const GLeg& leg, std::span<const VertexId> subset) {
  std::unordered_map<VertexId, int> position;
  position.reserve(leg.vertices.size());
  for (std::size_t j = 0; j < leg.vertices.size(); ++j) position.emplace(leg.vertices[j], leg.positions[j]);

  std::vector<VertexId> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  LegSelectionProfile profile;
  for (const VertexId v : members) {
    const auto it = position.find(v);
    if (it == position.end()) {
      throw VertexNotOnLeg("vertex " + std::to_string(v) + " is not on the leg rooted at " +
                           std::to_string(leg.root));
    }
    add_to_profile(profile, leg, v, it->second);
  }
  return type_from_profile(leg.kind, profile);
}

LegSolutionTable min_cost_solutions(const GLeg& leg, const WeightedTree& tree) {
  LegSolutionTable table;
  if (leg.kind != LegKind::Modified) {
    table[SolutionType::S0] = LegChoice{};
    table[SolutionType::S3] = make_choice(tree, {leg.vertices.front()});
    if (leg.kind == LegKind::LongStandard) {
      const auto beyond_first = two_cheapest(leg, tree, [&](std::size_t j) { return leg.positions[j] >= 2; });
      table[SolutionType::S1] = make_choice(tree, {beyond_first[0]});
      const auto any = two_cheapest(leg, tree, [](std::size_t) { return true; });
      table[SolutionType::S2] = make_choice(tree, {any[0], any[1]});
    }
    return table;
  }

  const VertexId b = cheaper(tree, leg.ell_a, leg.ell_b) ? leg.ell_a : leg.ell_b;
  table[SolutionType::M1] = make_choice(tree, {b});
  const int far = leg.small_core_position + 2;
  const auto beyond = two_cheapest(leg, tree, [&](std::size_t j) { return leg.positions[j] >= far; });
  if (beyond[1] >= 0) table[SolutionType::M2] = make_choice(tree, {beyond[0], beyond[1]});
  const auto partner = two_cheapest(leg, tree, [&](std::size_t j) { return leg.vertices[j] != b; });
  table[SolutionType::M3] = make_choice(tree, {b, partner[0]});
  return table;
}

Cost LocalSetAssignment::cost() const {
  Cost sum;
  for (const auto& leg : legs) sum += leg.cost;
  return sum;
}

std::vector<VertexId> LocalSetAssignment::vertices() const {
  std::vector<VertexId> out;
  for (const auto& leg : legs) out.insert(out.end(), leg.vertices.begin(), leg.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> local_set_violations(std::span<const LegKind> kinds, std::span<const SolutionType> types) {
  auto is_s = [](SolutionType t) {
    return t == SolutionType::S0 || t == SolutionType::S1 || t == SolutionType::S2 || t == SolutionType::S3;
  };
  auto is_m = [](SolutionType t) {
    return t == SolutionType::M1 || t == SolutionType::M2 || t == SolutionType::M3;
  };

  bool cond[6] = {true, true, true, true, true, true};
  int standard_empty = 0;
  bool short_empty = false;
  bool any_m1 = false;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    if (kinds[j] == LegKind::Modified) {
      if (!is_m(types[j])) cond[2] = false;
      any_m1 = any_m1 || types[j] == SolutionType::M1;
      continue;
    }
    if (!is_s(types[j])) cond[1] = false;
    if (kinds[j] == LegKind::ShortStandard &&
        (types[j] == SolutionType::S1 || types[j] == SolutionType::S2)) {
      cond[1] = false;
    }
    if (types[j] == SolutionType::S0) {
      ++standard_empty;
      short_empty = short_empty || kinds[j] == LegKind::ShortStandard;
    }
  }
  if (standard_empty > 1) cond[1] = false;
  if (standard_empty > 0 && any_m1) cond[3] = false;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    if (kinds[j] != LegKind::LongStandard || types[j] != SolutionType::S0) continue;
    for (std::size_t other = 0; other < kinds.size(); ++other) {
      if (other != j && kinds[other] == LegKind::LongStandard && types[other] != SolutionType::S2) {
        cond[4] = false;
      }
    }
  }
  if (short_empty) {
    for (std::size_t j = 0; j < kinds.size(); ++j) {
      if (kinds[j] == LegKind::LongStandard && types[j] != SolutionType::S2 && types[j] != SolutionType::S3) {
        cond[5] = false;
      }
    }
  }

  std::vector<int> violated;
  for (int c = 1; c <= 5; ++c) {
    if (!cond[c]) violated.push_back(c);
  }
  return violated;
}

LocalSetCheck is_local_set(std::span<const GLeg> legs, std::span<const VertexId> subset) {
  struct Slot {
    std::size_t leg;
    int position;
  };
  std::unordered_map<VertexId, Slot> where;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    for (std::size_t j = 0; j < legs[l].vertices.size(); ++j) {
      where.emplace(legs[l].vertices[j], Slot{l, legs[l].positions[j]});
    }
  }

  std::vector<VertexId> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<LegSelectionProfile> profiles(legs.size());
  for (const VertexId v : members) {
    const auto it = where.find(v);
    if (it == where.end()) continue;
    add_to_profile(profiles[it->second.leg], legs[it->second.leg], v, it->second.position);
  }

  LocalSetCheck check;
  std::vector<LegKind> kinds;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    kinds.push_back(legs[l].kind);
    check.types.push_back(type_from_profile(legs[l].kind, profiles[l]));
  }
  check.violated = local_set_violations(kinds, check.types);
  check.ok = check.violated.empty();
  return check;
}

bool is_thrifty(const LocalSetAssignment& assignment) {
  for (const auto& leg : assignment.legs) {
    const bool sized = leg.type == SolutionType::S2 || leg.type == SolutionType::M2 || leg.type == SolutionType::M3;
    if (sized && leg.vertices.size() != 2) return false;
  }
  return true;
}

}  // namespace treedim
