#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "doctest.h"
#include "support/support.hpp"
#include "treedim/leg_solutions.hpp"

using namespace treedim;
using namespace treedim::testing;

namespace {

const GLeg& leg_with_root(const Topology& topo, VertexId core, VertexId root) {
  for (const auto& leg : topo.core(core).glegs) {
    if (leg.root == root) return leg;
  }
  throw std::logic_error("no such leg");
}

// Spider with center 0 and one long leg of length `len` (vertices 1..len), plus two short legs.
WeightedTree long_leg_spider(int len, std::vector<Cost> leg_costs) {
  const int legs[] = {len, 1, 1};
  std::vector<Cost> costs(static_cast<std::size_t>(len + 3), Cost(1));
  std::copy(leg_costs.begin(), leg_costs.end(), costs.begin() + 1);
  return build_tree(len + 3, spider_edges(legs), costs);
}

}  // namespace

TEST_CASE("type_of_solution on standard legs") {
  const auto topo = classify(long_leg_spider(3, {}));
  const auto& leg = leg_with_root(topo, 0, 1);
  REQUIRE(leg.kind == LegKind::LongStandard);
  CHECK(type_of_solution(leg, {}) == SolutionType::S0);
  const VertexId pos1[] = {1};
  const VertexId pos3[] = {3};
  const VertexId deep_pair[] = {2, 3};
  const VertexId dup[] = {3, 3};
  CHECK(type_of_solution(leg, pos1) == SolutionType::S3);
  CHECK(type_of_solution(leg, pos3) == SolutionType::S1);
  CHECK(type_of_solution(leg, deep_pair) == SolutionType::S2);
  CHECK(type_of_solution(leg, dup) == SolutionType::S1);
  const VertexId stray[] = {4};
  CHECK_THROWS_AS(type_of_solution(leg, stray), VertexNotOnLeg);
}

TEST_CASE("type_of_solution on modified legs") {
  // Core 0 with long legs; modified leg 0-5-6-7 where 7 is the small core at position 3,
  // ell vertices 8 (long leg 8-9-10) and 11 (short).
  const auto t = build_unit_tree(12, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7},
                                      {7, 8}, {8, 9}, {9, 10}, {7, 11}});
  const auto topo = classify(t);
  const auto& leg = leg_with_root(topo, 0, 5);
  REQUIRE(leg.kind == LegKind::Modified);
  CHECK(leg.small_core == 7);
  CHECK(leg.small_core_position == 3);
  CHECK(leg.ell_a == 8);
  CHECK(leg.ell_b == 11);

  const VertexId a[] = {8};
  const VertexId b[] = {11};
  const VertexId deep[] = {9, 10};
  const VertexId deep_plus_low[] = {5, 9, 10};
  const VertexId with_ell[] = {11, 10};
  const VertexId pos1[] = {5};
  const VertexId one_deep[] = {9, 6};
  CHECK(type_of_solution(leg, a) == SolutionType::M1);
  CHECK(type_of_solution(leg, b) == SolutionType::M1);
  CHECK(type_of_solution(leg, deep) == SolutionType::M2);
  CHECK(type_of_solution(leg, deep_plus_low) == SolutionType::M2);
  CHECK(type_of_solution(leg, with_ell) == SolutionType::M3);
  CHECK(type_of_solution(leg, pos1) == SolutionType::Invalid);
  CHECK(type_of_solution(leg, one_deep) == SolutionType::Invalid);
  CHECK(type_of_solution(leg, {}) == SolutionType::Invalid);
}

TEST_CASE("min_cost_solutions examples") {
  SUBCASE("long leg with unit costs") {
    const auto t = long_leg_spider(3, {});
    const auto topo = classify(t);
    const auto table = min_cost_solutions(leg_with_root(topo, 0, 1), t);
    CHECK(table[SolutionType::S0]->cost == Cost(0));
    CHECK(table[SolutionType::S1]->cost == Cost(1));
    CHECK(table[SolutionType::S2]->cost == Cost(2));
    CHECK(table[SolutionType::S3]->cost == Cost(1));
    CHECK_FALSE(table[SolutionType::M1].has_value());
  }
  SUBCASE("short leg") {
    const auto t = star_k13();
    const auto topo = classify(t);
    const auto table = min_cost_solutions(topo.core(0).glegs[0], t);
    CHECK(table[SolutionType::S0]->cost == Cost(0));
    CHECK(table[SolutionType::S3]->cost == Cost(1));
    CHECK_FALSE(table[SolutionType::S1].has_value());
    CHECK_FALSE(table[SolutionType::S2].has_value());
  }
  SUBCASE("modified leg of T_mod") {
    const auto t = t_mod();
    const auto topo = classify(t);
    const auto table = min_cost_solutions(leg_with_root(topo, 0, 5), t);
    CHECK(table[SolutionType::M1]->cost == Cost(1));
    CHECK_FALSE(table[SolutionType::M2].has_value());
    CHECK(table[SolutionType::M3]->cost == Cost(2));
    CHECK_FALSE(table[SolutionType::S0].has_value());
  }
  SUBCASE("cost ties resolve to lower ids") {
    const auto t = long_leg_spider(3, {Cost(1), Cost(1), Cost(2)});
    const auto topo = classify(t);
    const auto table = min_cost_solutions(leg_with_root(topo, 0, 1), t);
    const auto s2 = table[SolutionType::S2]->vertices();
    CHECK(std::vector<VertexId>(s2.begin(), s2.end()) == std::vector<VertexId>{1, 2});
  }
}

TEST_CASE("min_cost_solutions finds true minima on short legs") {
  Rng rng(23);
  int legs_checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto n = static_cast<VertexId>(5 + rng() % 12);
    const auto t = build_tree(n, random_tree_edges(n, rng), random_costs(n, rng));
    const auto topo = classify(t);
    for (const auto& core : topo.cores) {
      for (const auto& leg : core.glegs) {
        if (leg.size() > 8) continue;
        ++legs_checked;
        std::array<std::optional<Cost>, kSolutionTypeCount> best;
        const auto m = leg.size();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
          std::vector<VertexId> subset;
          for (std::size_t j = 0; j < m; ++j) {
            if (mask >> j & 1u) subset.push_back(leg.vertices[j]);
          }
          const auto type = type_of_solution(leg, subset);
          if (type == SolutionType::Invalid) continue;
          const Cost c = total_cost(t, subset);
          auto& slot = best[static_cast<std::size_t>(type)];
          if (!slot || c < *slot) slot = c;
        }
        const auto table = min_cost_solutions(leg, t);
        for (std::size_t ty = 0; ty < kSolutionTypeCount; ++ty) {
          const auto type = static_cast<SolutionType>(ty);
          REQUIRE(best[ty].has_value() == table[type].has_value());
          if (!best[ty]) continue;
          CHECK(table[type]->cost == *best[ty]);
          CHECK(table[type]->cost == total_cost(t, table[type]->vertices()));
          CHECK(type_of_solution(leg, table[type]->vertices()) == type);
        }
      }
    }
  }
  CHECK(legs_checked > 1000);
}

TEST_CASE("is_local_set examples") {
  SUBCASE("spider with every position-one vertex") {
    const auto topo = classify(spider_222());
    const VertexId subset[] = {1, 3, 5};
    const auto check = is_local_set(topo.core(0).glegs, subset);
    CHECK(check.ok);
    CHECK(check.types == std::vector<SolutionType>{SolutionType::S3, SolutionType::S3, SolutionType::S3});
  }
  SUBCASE("one long leg empty while the other is S3") {
    const int legs[] = {2, 2, 1};
    const auto topo = classify(build_unit_tree(6, spider_edges(legs)));
    const VertexId subset[] = {1};
    const auto check = is_local_set(topo.core(0).glegs, subset);
    CHECK_FALSE(check.ok);
    CHECK(std::count(check.violated.begin(), check.violated.end(), 4) == 1);
  }
  SUBCASE("caterpillar core 1 with an empty short leg next to M1") {
    const auto topo = classify(caterpillar6());
    const VertexId subset[] = {0, 3};
    const auto check = is_local_set(topo.core(1).glegs, subset);
    CHECK_FALSE(check.ok);
    CHECK(check.violated == std::vector<int>{3});
  }
}

TEST_CASE("is_local_set examples agree with the verifier") {
  // The caterpillar subset {0,3} is rejected; the verifier must reject it too.
  const VertexId subset[] = {0, 3};
  CHECK_FALSE(verify_landmark(caterpillar6(), subset, {}).valid);
}

TEST_CASE("local_set_violations covers each condition") {
  using K = LegKind;
  using T = SolutionType;
  const K two_short[] = {K::ShortStandard, K::ShortStandard};
  const T both_empty[] = {T::S0, T::S0};
  CHECK(local_set_violations(two_short, both_empty) == std::vector<int>{1});
  const K short_mod[] = {K::ShortStandard, K::Modified};
  const T s3_s0[] = {T::S3, T::S0};
  CHECK(local_set_violations(short_mod, s3_s0) == std::vector<int>{2});
  const K short_long[] = {K::ShortStandard, K::LongStandard, K::LongStandard};
  const T s0_s1_s2[] = {T::S0, T::S1, T::S2};
  CHECK(local_set_violations(short_long, s0_s1_s2) == std::vector<int>{5});
  const T s3_s0_s2[] = {T::S3, T::S0, T::S2};
  CHECK(local_set_violations(short_long, s3_s0_s2).empty());
}

TEST_CASE("is_thrifty") {
  LocalSetAssignment a;
  a.legs.push_back({0, 1, LegKind::LongStandard, {1, 2}, SolutionType::S2, Cost(2)});
  CHECK(is_thrifty(a));
  a.legs[0].vertices = {1, 2, 3};
  CHECK_FALSE(is_thrifty(a));
  LocalSetAssignment b;
  b.legs.push_back({0, 1, LegKind::ShortStandard, {1}, SolutionType::S3, Cost(1)});
  b.legs.push_back({1, 5, LegKind::Modified, {7}, SolutionType::M1, Cost(1)});
  CHECK(is_thrifty(b));
}

TEST_CASE("local sets on a main core have at least two vertices") {
  Rng rng(29);
  int cores_checked = 0;
  for (int trial = 0; trial < 400 && cores_checked < 300; ++trial) {
    const auto n = static_cast<VertexId>(5 + rng() % 10);
    const auto t = build_unit_tree(n, random_tree_edges(n, rng));
    const auto topo = classify(t);
    for (const auto& core : topo.cores) {
      if (topo.classes[core.id] != VertexClass::MainCore) continue;
      std::vector<VertexId> pool;
      for (const auto& leg : core.glegs) pool.insert(pool.end(), leg.vertices.begin(), leg.vertices.end());
      if (pool.size() > 12) continue;
      ++cores_checked;
      for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        if (std::popcount(mask) >= 2) continue;
        std::vector<VertexId> subset;
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (mask >> j & 1u) subset.push_back(pool[j]);
        }
        CHECK_FALSE(is_local_set(core.glegs, subset).ok);
      }
    }
  }
  CHECK(cores_checked >= 100);
}
