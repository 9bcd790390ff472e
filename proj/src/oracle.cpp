#include "treedim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace treedim {

Verdict verify_landmark(const WeightedTree& tree, std::span<const VertexId> landmarks, ModelKind model,
                        std::size_t max_violations) {
  const VertexId n = tree.size();
  std::vector<VertexId> members(landmarks.begin(), landmarks.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (const VertexId v : members) {
    if (v < 0 || v >= n) {
      throw TreeError(TreeErrorKind::IndexOutOfRange,
                      "landmark " + std::to_string(v) + " is outside [0, " + std::to_string(n) + ")", -1, v);
    }
    in_set[v] = 1;
  }

  std::vector<std::vector<int>> dist;
  dist.reserve(members.size());
  for (const VertexId v : members) dist.push_back(bfs_distances(tree, v));

  Verdict verdict;
  for (VertexId x = 0; x < n; ++x) {
    if (model.model == Model::NL && in_set[x]) continue;
    for (VertexId y = x + 1; y < n; ++y) {
      if (model.model == Model::NL && in_set[y]) continue;
      int separators = 0;
      for (const auto& d : dist) {
        if (d[x] != d[y] && ++separators >= model.k) break;
      }
      if (separators < model.k) {
        verdict.valid = false;
        verdict.violations.push_back({x, y, separators});
        if (max_violations != 0 && verdict.violations.size() >= max_violations) return verdict;
      }
    }
  }
  return verdict;
}

BruteResult brute_min(const WeightedTree& tree, ModelKind model, int cap) {
  const VertexId n = tree.size();
  if (n > cap || n > 30) {
    throw TooLarge("brute force limited to n <= " + std::to_string(std::min(cap, 30)) + ", got n = " +
                   std::to_string(n));
  }

  std::vector<std::vector<int>> dist;
  for (VertexId v = 0; v < n; ++v) dist.push_back(bfs_distances(tree, v));

  struct Pair {
    std::uint32_t members;     // bit mask of {x, y}
    std::uint32_t separators;  // bit mask of vertices separating x and y
  };
  std::vector<Pair> pairs;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      std::uint32_t sep = 0;
      for (VertexId t = 0; t < n; ++t) {
        if (dist[t][x] != dist[t][y]) sep |= 1u << t;
      }
      pairs.push_back({(1u << x) | (1u << y), sep});
    }
  }

  auto ids = [n](std::uint32_t mask) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) out.push_back(v);
    }
    return out;
  };

  std::optional<std::uint32_t> best;
  Cost best_cost;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t wide = 0; wide < limit; ++wide) {
    const auto mask = static_cast<std::uint32_t>(wide);
    bool ok = true;
    for (const Pair& p : pairs) {
      if (model.model == Model::NL && (p.members & mask) != 0) continue;
      if (std::popcount(p.separators & mask) < model.k) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Cost cost;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) cost += tree.cost(v);
    }
    if (!best || cost < best_cost || (cost == best_cost && ids(mask) < ids(*best))) {
      best = mask;
      best_cost = cost;
    }
  }

  BruteResult result;
  if (best) {
    result.found = true;
    result.landmarks = ids(*best);
    result.cost = best_cost;
  }
  return result;
}

bool is_minimal_inclusion(const WeightedTree& tree, std::span<const VertexId> landmarks, ModelKind model) {
  std::vector<VertexId> members(landmarks.begin(), landmarks.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!verify_landmark(tree, members, model, 1).valid) {
    throw NotALandmarkSet("the given set is not a landmark set");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<VertexId> reduced = members;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (verify_landmark(tree, reduced, model, 1).valid) return false;
  }
  return true;
}

}  // namespace treedim
