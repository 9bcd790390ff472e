#include "treedim/topology.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace treedim {

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Isolated: return "isolated";
    case VertexClass::Leaf: return "leaf";
    case VertexClass::PathVertex: return "path";
    case VertexClass::SmallCore: return "small_core";
    case VertexClass::MinorCore: return "minor_core";
    case VertexClass::MainCore: return "main_core";
  }
  return "?";
}

std::string_view to_string(LegKind k) {
  switch (k) {
    case LegKind::ShortStandard: return "short";
    case LegKind::LongStandard: return "long";
    case LegKind::Modified: return "modified";
  }
  return "?";
}

std::string_view to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Tiny: return "tiny";
    case CaseTag::Path: return "path";
    case CaseTag::SingleSmallCore: return "single_small_core";
    case CaseTag::TwoSmallCores: return "two_small_cores";
    case CaseTag::HasRegularCore: return "has_regular_core";
  }
  return "?";
}

std::vector<VertexId> Topology::regular_cores() const {
  std::vector<VertexId> out;
  for (const auto& c : cores) {
    if (is_regular_core(classes[c.id])) out.push_back(c.id);
  }
  return out;
}

std::vector<VertexId> Topology::small_cores() const {
  std::vector<VertexId> out;
  for (const auto& c : cores) {
    if (classes[c.id] == VertexClass::SmallCore) out.push_back(c.id);
  }
  return out;
}

namespace {

// The tree re-laid out in breadth-first order from a core: the children of a
// vertex get consecutive ranks, so a vertex's neighborhood is one parent
// record plus one contiguous run. Built by a single BFS, whose independent
// loads overlap well; everything after it stays in rank space.
class BfsLayout {
 public:
  struct Node {
    VertexId orig = -1;
    VertexId parent = -1;
    VertexId first_child = 0;
    VertexId children = 0;
    int depth = 0;
    VertexId cores_below = 0;
    std::int64_t core_rank_sum = 0;
  };

  BfsLayout(const WeightedTree& tree, VertexId root) {
    const auto n = static_cast<std::size_t>(tree.size());
    rank.assign(n, -1);
    nodes.resize(n);
    rank[root] = 0;
    nodes[0].orig = root;
    VertexId tail = 1;
    for (VertexId r = 0; r < static_cast<VertexId>(n); ++r) {
      Node& node = nodes[static_cast<std::size_t>(r)];
      node.first_child = tail;
      for (const VertexId w : tree.neighbors(node.orig)) {
        if (rank[w] >= 0) continue;
        rank[w] = tail;
        Node& child = nodes[static_cast<std::size_t>(tail++)];
        child.orig = w;
        child.parent = r;
        child.depth = node.depth + 1;
      }
      node.children = tail - node.first_child;
    }
    for (auto r = static_cast<VertexId>(n); r-- > 0;) {
      Node& node = nodes[static_cast<std::size_t>(r)];
      if (degree(r) >= 3) {
        ++node.cores_below;
        node.core_rank_sum += r;
      }
      if (node.parent >= 0) {
        Node& up = nodes[static_cast<std::size_t>(node.parent)];
        up.cores_below += node.cores_below;
        up.core_rank_sum += node.core_rank_sum;
      }
    }
  }

  const Node& operator[](VertexId r) const { return nodes[static_cast<std::size_t>(r)]; }
  int degree(VertexId r) const { return (*this)[r].children + ((*this)[r].parent >= 0 ? 1 : 0); }

  template <typename Fn>
  void for_each_neighbor(VertexId r, Fn&& fn) const {
    const Node& node = (*this)[r];
    if (node.parent >= 0) fn(node.parent);
    for (VertexId c = node.first_child; c < node.first_child + node.children; ++c) fn(c);
  }

  std::vector<VertexId> rank;  // original id -> rank
  std::vector<Node> nodes;
};

// Core count and (when the count is 1) the rank of that core, for the
// component of (tree - r) containing neighbor rank w.
struct Side {
  VertexId cores = 0;
  VertexId single_core = -1;
};

Side side_of(const BfsLayout& t, VertexId r, VertexId w) {
  const auto& nw = t[w];
  if (nw.parent == r) return {nw.cores_below, nw.cores_below == 1 ? static_cast<VertexId>(nw.core_rank_sum) : -1};
  const VertexId cores = t[0].cores_below - t[r].cores_below;
  const auto sum = t[0].core_rank_sum - t[r].core_rank_sum;
  return {cores, cores == 1 ? static_cast<VertexId>(sum) : -1};
}

// The neighbor subtree below rank r that starts at child c, level by level.
GLeg downward_leg(const BfsLayout& t, VertexId r, VertexId c, LegKind kind) {
  GLeg leg;
  leg.owner = t[r].orig;
  leg.root = t[c].orig;
  leg.kind = kind;
  const int base = t[r].depth;
  // Ranks of one BFS level inside a subtree are contiguous, and so are the
  // children of a contiguous run: each level is a single rank interval.
  VertexId lo = c;
  VertexId hi = c + 1;
  while (lo < hi) {
    for (VertexId x = lo; x < hi; ++x) {
      leg.vertices.push_back(t[x].orig);
      leg.positions.push_back(t[x].depth - base);
    }
    const VertexId next_lo = t[lo].first_child;
    const VertexId next_hi = t[hi - 1].first_child + t[hi - 1].children;
    lo = next_lo;
    hi = next_hi;
  }
  return leg;
}

void set_ell(GLeg& leg, const WeightedTree& tree, std::array<VertexId, 2> next_level) {
  std::sort(next_level.begin(), next_level.end());
  const bool first_short = tree.degree(next_level[0]) == 1;
  const bool second_short = tree.degree(next_level[1]) == 1;
  if (!first_short && !second_short) {
    throw InternalInvariantViolation("small core " + std::to_string(leg.small_core) + " has no short leg");
  }
  // Both short: the lower id becomes ell_a.
  if (second_short) {
    leg.ell_a = next_level[0];
    leg.ell_b = next_level[1];
  } else {
    leg.ell_a = next_level[1];
    leg.ell_b = next_level[0];
  }
}

GLeg downward_modified_leg(const BfsLayout& t, const WeightedTree& tree, VertexId r, VertexId c,
                           VertexId small_rank) {
  GLeg leg = downward_leg(t, r, c, LegKind::Modified);
  const auto& s = t[small_rank];
  leg.small_core = s.orig;
  leg.small_core_position = s.depth - t[r].depth;
  if (s.children != 2) {
    throw InternalInvariantViolation("small core " + std::to_string(leg.small_core) +
                                     " does not have exactly two outward neighbors");
  }
  set_ell(leg, tree, {t[s.first_child].orig, t[s.first_child + 1].orig});
  return leg;
}

// The one leg that can point toward the layout root: breadth-first walk in
// original ids.
GLeg upward_modified_leg(const WeightedTree& tree, VertexId owner, VertexId root, VertexId small_core) {
  GLeg leg;
  leg.owner = owner;
  leg.root = root;
  leg.kind = LegKind::Modified;
  leg.small_core = small_core;

  std::vector<VertexId> from;  // BFS predecessor, parallel to leg.vertices
  leg.vertices.push_back(root);
  leg.positions.push_back(1);
  from.push_back(owner);
  for (std::size_t head = 0; head < leg.vertices.size(); ++head) {
    const VertexId v = leg.vertices[head];
    for (const VertexId w : tree.neighbors(v)) {
      if (w == from[head]) continue;
      leg.vertices.push_back(w);
      leg.positions.push_back(leg.positions[head] + 1);
      from.push_back(v);
    }
  }

  std::array<VertexId, 2> next_level{-1, -1};
  int found = 0;
  for (std::size_t j = 0; j < leg.vertices.size(); ++j) {
    if (leg.vertices[j] == small_core) leg.small_core_position = leg.positions[j];
    if (from[j] == small_core) {
      if (found < 2) next_level[static_cast<std::size_t>(found)] = leg.vertices[j];
      ++found;
    }
  }
  if (found != 2) {
    throw InternalInvariantViolation("small core " + std::to_string(small_core) +
                                     " does not have exactly two outward neighbors");
  }
  set_ell(leg, tree, next_level);
  return leg;
}

}  // namespace

Topology classify(const WeightedTree& tree) {
  const VertexId n = tree.size();
  Topology topo;
  topo.classes.assign(static_cast<std::size_t>(n), VertexClass::Leaf);
  topo.core_index.assign(static_cast<std::size_t>(n), -1);

  if (n <= 2) {
    if (n == 1) topo.classes[0] = VertexClass::Isolated;
    topo.case_tag = CaseTag::Tiny;
    return topo;
  }

  VertexId first_core = -1;
  int core_count = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int d = tree.degree(v);
    if (d >= 3) {
      topo.core_index[v] = core_count++;
      if (first_core < 0) first_core = v;
    } else if (d == 2) {
      topo.classes[v] = VertexClass::PathVertex;
    }
  }
  if (first_core < 0) {
    topo.case_tag = CaseTag::Path;
    return topo;
  }

  const BfsLayout t(tree, first_core);

  // Pass 1: small cores depend only on which neighbor subtrees are core-free.
  std::vector<char> small(static_cast<std::size_t>(n), 0);  // by rank
  for (VertexId r = 0; r < n; ++r) {
    if (t.degree(r) != 3) continue;
    int standard = 0;
    bool has_short = false;
    t.for_each_neighbor(r, [&](VertexId w) {
      if (side_of(t, r, w).cores == 0) {
        ++standard;
        has_short = has_short || t.degree(w) == 1;
      }
    });
    small[r] = standard >= 2 && has_short;
  }

  // Pass 2, in id order: legs, minor/main refinement, g-leg materialization.
  topo.cores.reserve(static_cast<std::size_t>(core_count));
  int small_count = 0;
  int regular_count = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (topo.core_index[v] < 0) continue;
    const VertexId r = t.rank[v];
    CoreInfo info;
    info.id = v;
    info.glegs.reserve(static_cast<std::size_t>(tree.degree(v)));
    int standard = 0;
    int modified = 0;
    bool has_short = false;
    t.for_each_neighbor(r, [&](VertexId w) {
      const Side side = side_of(t, r, w);
      if (side.cores == 0) {
        // Core-free sides always lie below: the layout root is a core.
        const LegKind kind = t.degree(w) == 1 ? LegKind::ShortStandard : LegKind::LongStandard;
        info.glegs.push_back(downward_leg(t, r, w, kind));
        ++standard;
        has_short = has_short || kind == LegKind::ShortStandard;
      } else if (side.cores == 1 && small[side.single_core]) {
        info.glegs.push_back(t[w].parent == r ? downward_modified_leg(t, tree, r, w, side.single_core)
                                              : upward_modified_leg(tree, v, t[w].orig, t[side.single_core].orig));
        ++modified;
      } else {
        ++info.non_gleg_subtrees;
      }
    });
    std::sort(info.glegs.begin(), info.glegs.end(), [](const GLeg& a, const GLeg& b) { return a.root < b.root; });

    if (small[r]) {
      topo.classes[v] = VertexClass::SmallCore;
      ++small_count;
    } else {
      const int glegs = standard + modified;
      const bool minor = glegs <= 1 || (tree.degree(v) >= 4 && modified == 0 && standard == 2 && has_short);
      topo.classes[v] = minor ? VertexClass::MinorCore : VertexClass::MainCore;
      ++regular_count;
    }
    topo.cores.push_back(std::move(info));
  }

  if (regular_count > 0) {
    topo.case_tag = CaseTag::HasRegularCore;
  } else if (small_count == 1) {
    topo.case_tag = CaseTag::SingleSmallCore;
  } else if (small_count == 2) {
    topo.case_tag = CaseTag::TwoSmallCores;
  } else {
    throw InternalInvariantViolation(std::to_string(small_count) +
                                     " small cores and no regular core");
  }
  return topo;
}

LegPositions gleg_positions(const GLeg& leg) {
  LegPositions out;
  for (std::size_t j = 0; j < leg.vertices.size(); ++j) {
    out.position.emplace(leg.vertices[j], leg.positions[j]);
  }
  if (leg.kind == LegKind::Modified) out.ell = std::make_pair(leg.ell_a, leg.ell_b);
  return out;
}

}  // namespace treedim
