#include "treedim/generators.hpp"

#include <stdexcept>
#include <string>

namespace treedim {

std::vector<Edge> path_edges(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return edges;
}

std::vector<Edge> star_edges(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return edges;
}

std::vector<Edge> spider_edges(std::span<const int> leg_lengths) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (const int len : leg_lengths) {
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return edges;
}

std::vector<Edge> spider_edges(VertexId n) {
  if (n < 4) throw std::invalid_argument("spider needs n >= 4");
  const int rest = n - 1;
  const int legs[3] = {(rest + 2) / 3, (rest + 1) / 3, rest / 3};
  return spider_edges(legs);
}

std::vector<Edge> caterpillar_edges(VertexId n) {
  const VertexId spine = (n + 2) / 2;
  if (spine < 3) return path_edges(n);
  std::vector<Edge> edges = path_edges(spine);
  const VertexId inner = spine - 2;
  for (VertexId leaf = spine, k = 0; leaf < n; ++leaf, ++k) edges.emplace_back(1 + k % inner, leaf);
  return edges;
}

std::vector<Edge> double_spider_edges(int interior, int u_long, int v_long) {
  if (interior < 0 || u_long < 1 || v_long < 1) throw std::invalid_argument("bad double spider shape");
  // u = 0, path interior 1..interior, v = interior + 1, then the legs.
  std::vector<Edge> edges = path_edges(interior + 2);
  const VertexId u = 0;
  const VertexId v = interior + 1;
  VertexId next = interior + 2;
  auto leg = [&](VertexId from, int len) {
    VertexId prev = from;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  };
  leg(u, 1);
  leg(u, u_long);
  leg(v, 1);
  leg(v, v_long);
  return edges;
}

std::vector<Edge> double_spider_edges(VertexId n) {
  if (n < 6) throw std::invalid_argument("double-spider needs n >= 6");
  const int rest = n - 4;
  const int interior = (rest - 2) / 3;
  const int legs = rest - interior;
  return double_spider_edges(interior, (legs + 1) / 2, legs / 2);
}

std::vector<Edge> prufer_decode(std::span<const VertexId> sequence, VertexId n) {
  if (n == 1) return {};
  if (static_cast<VertexId>(sequence.size()) != n - 2) throw std::invalid_argument("Prüfer sequence must have n-2 entries");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (const VertexId v : sequence) {
    if (v < 0 || v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  // Linear-time decoding: `ptr` scans for the next leaf, `leaf` may jump back.
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (const VertexId v : sequence) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

std::vector<Edge> random_tree_edges(VertexId n, Rng& rng) {
  if (n <= 1) return {};
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<VertexId> seq(static_cast<std::size_t>(n - 2));
  for (auto& v : seq) v = pick(rng);
  return prufer_decode(seq, n);
}

std::vector<Cost> unit_costs(VertexId n) { return std::vector<Cost>(static_cast<std::size_t>(n), Cost(1)); }

std::vector<Cost> random_costs(VertexId n, Rng& rng) {
  std::uniform_int_distribution<int> numerator(0, 100);
  std::uniform_int_distribution<int> denominator_index(0, 2);
  std::vector<Cost> costs;
  costs.reserve(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const int p = numerator(rng);
    costs.emplace_back(p, 1 << denominator_index(rng));
  }
  return costs;
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "path") return GenKind::Path;
  if (name == "star") return GenKind::Star;
  if (name == "spider") return GenKind::Spider;
  if (name == "caterpillar") return GenKind::Caterpillar;
  if (name == "double-spider") return GenKind::DoubleSpider;
  if (name == "random") return GenKind::Random;
  throw std::invalid_argument("unknown tree kind '" + std::string(name) + "'");
}

std::vector<Edge> generate_edges(GenKind kind, VertexId n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  switch (kind) {
    case GenKind::Path: return path_edges(n);
    case GenKind::Star: return star_edges(n);
    case GenKind::Spider: return spider_edges(n);
    case GenKind::Caterpillar: return caterpillar_edges(n);
    case GenKind::DoubleSpider: return double_spider_edges(n);
    case GenKind::Random: return random_tree_edges(n, rng);
  }
  return {};
}

}  // namespace treedim
