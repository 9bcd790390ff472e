#include <algorithm>
#include <queue>

#include "doctest.h"
#include "support/support.hpp"
#include "treedim/generators.hpp"
#include "treedim/tree.hpp"

using namespace treedim;

TEST_CASE("build_tree accepts the single vertex tree") {
  const auto t = build_tree(1, {}, {Cost(1)});
  CHECK(t.size() == 1);
  CHECK(t.degree(0) == 0);
  CHECK(t.edges().empty());
}

TEST_CASE("build_tree builds the star with sorted adjacency") {
  const auto t = build_unit_tree(4, {{0, 3}, {2, 0}, {0, 1}});
  CHECK(t.degree(0) == 3);
  const auto nb = t.neighbors(0);
  CHECK(std::vector<VertexId>(nb.begin(), nb.end()) == std::vector<VertexId>{1, 2, 3});
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("build_tree reports the offending item") {
  SUBCASE("cycle") {
    try {
      build_unit_tree(4, {{0, 1}, {1, 2}, {2, 0}});
      FAIL("expected TreeError");
    } catch (const TreeError& e) {
      CHECK(e.kind() == TreeErrorKind::NotATree);
      CHECK(e.edge() == 2);
    }
  }
  SUBCASE("too few edges") {
    try {
      build_unit_tree(4, {{0, 1}, {1, 2}});
      FAIL("expected TreeError");
    } catch (const TreeError& e) {
      CHECK(e.kind() == TreeErrorKind::NotATree);
      CHECK(e.vertex() == 3);
    }
  }
  SUBCASE("out of range") {
    try {
      build_unit_tree(3, {{0, 1}, {1, 5}});
      FAIL("expected TreeError");
    } catch (const TreeError& e) {
      CHECK(e.kind() == TreeErrorKind::IndexOutOfRange);
      CHECK(e.edge() == 1);
      CHECK(e.vertex() == 5);
    }
  }
  SUBCASE("self loop and duplicate") {
    CHECK_THROWS_AS(build_unit_tree(3, {{0, 0}, {1, 2}}), TreeError);
    CHECK_THROWS_AS(build_unit_tree(3, {{0, 1}, {1, 0}}), TreeError);
  }
  SUBCASE("cost count") { CHECK_THROWS_AS(build_tree(3, {{0, 1}, {1, 2}}, {Cost(1)}), TreeError); }
}

TEST_CASE("bfs_distances") {
  CHECK(bfs_distances(testing::path_tree(5), 0) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(bfs_distances(testing::star_k13(), 1) == std::vector<int>{1, 0, 2, 2});
}

TEST_CASE("bfs distances are additive along tree paths") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const VertexId n = 2 + static_cast<VertexId>(rng() % 40);
    const auto t = build_unit_tree(n, random_tree_edges(n, rng));
    std::vector<std::vector<int>> d;
    for (VertexId v = 0; v < n; ++v) d.push_back(bfs_distances(t, v));
    for (VertexId x = 0; x < n; ++x) {
      CHECK(d[x][x] == 0);
      for (const auto& [a, b] : t.edges()) CHECK(std::abs(d[x][a] - d[x][b]) == 1);
      for (VertexId z = 0; z < n; ++z) {
        CHECK(d[x][z] == d[z][x]);
        for (VertexId y = 0; y < n; ++y) CHECK(d[x][z] <= d[x][y] + d[y][z]);
      }
    }
  }
}

TEST_CASE("build_tree accepts exactly the edge lists forming one component with n-1 edges") {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const VertexId n = 1 + static_cast<VertexId>(rng() % 7);
    const int m = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      edges.emplace_back(static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n));
    }
    // Independent check: simple graph, n-1 edges, BFS reaches every vertex.
    bool expect = static_cast<VertexId>(edges.size()) == n - 1;
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    std::vector<Edge> norm;
    for (auto [a, b] : edges) {
      if (a == b) expect = false;
      norm.emplace_back(std::min(a, b), std::max(a, b));
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end()) expect = false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached != n) expect = false;

    bool accepted = true;
    try {
      build_unit_tree(n, edges);
    } catch (const TreeError&) {
      accepted = false;
    }
    CHECK(accepted == expect);
  }
}

TEST_CASE("total_cost") {
  const auto t = testing::with_costs(testing::path_tree(5),
                                     {Cost(1, 2), Cost(3, 2), Cost(1), Cost(1), Cost(1)});
  CHECK(total_cost(t, {}) == Cost(0));
  const VertexId pair[] = {0, 1};
  CHECK(total_cost(t, pair) == Cost(2));
  const VertexId all[] = {0, 1, 2, 3, 4};
  CHECK(total_cost(testing::path_tree(5), all) == Cost(5));
}
