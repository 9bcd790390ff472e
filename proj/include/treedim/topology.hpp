#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "treedim/tree.hpp"

namespace treedim {

enum class VertexClass {
  Isolated,  // only in the single-vertex tree
  Leaf,
  PathVertex,
  SmallCore,
  MinorCore,
  MainCore,
};

inline bool is_core(VertexClass c) {
  return c == VertexClass::SmallCore || c == VertexClass::MinorCore || c == VertexClass::MainCore;
}
inline bool is_regular_core(VertexClass c) {
  return c == VertexClass::MinorCore || c == VertexClass::MainCore;
}

enum class LegKind { ShortStandard, LongStandard, Modified };

enum class CaseTag { Tiny, Path, SingleSmallCore, TwoSmallCores, HasRegularCore };

std::string_view to_string(VertexClass c);
std::string_view to_string(LegKind k);
std::string_view to_string(CaseTag t);

/// One g-leg of a core: the component of (tree - owner) hanging off `root`.
///
/// `vertices` starts at `root`; `positions[j]` is the hop distance of
/// `vertices[j]` to the owner. For a modified leg the
/// small core sits at `small_core_position` (i) and `ell_a`, `ell_b` are the
/// two vertices at position i + 1, `ell_b` being the vertex of a short leg of
/// the small core.
struct GLeg {
  VertexId owner = -1;
  VertexId root = -1;
  LegKind kind = LegKind::ShortStandard;
  std::vector<VertexId> vertices;
  std::vector<int> positions;

  VertexId small_core = -1;
  int small_core_position = 0;
  VertexId ell_a = -1;
  VertexId ell_b = -1;

  bool is_standard() const { return kind != LegKind::Modified; }
  std::size_t size() const { return vertices.size(); }
};

struct CoreInfo {
  VertexId id = -1;
  std::vector<GLeg> glegs;     // ordered by root id
  int non_gleg_subtrees = 0;   // neighbor subtrees that are neither standard nor modified legs
};

struct Topology {
  std::vector<VertexClass> classes;
  std::vector<CoreInfo> cores;        // ascending by id
  std::vector<int> core_index;        // vertex -> index into `cores`, -1 if not a core
  CaseTag case_tag = CaseTag::Tiny;

  const CoreInfo& core(VertexId v) const { return cores.at(static_cast<std::size_t>(core_index.at(v))); }
  std::vector<VertexId> regular_cores() const;
  std::vector<VertexId> small_cores() const;
};

/// Thrown when classification reaches a state that a correct implementation
/// can never produce (e.g. three small cores and no regular core).
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Classifies every vertex, materializes each core's g-legs and computes the
/// case tag. Linear in the number of vertices.
Topology classify(const WeightedTree& tree);

struct LegPositions {
  std::map<VertexId, int> position;
  std::optional<std::pair<VertexId, VertexId>> ell;  // (ell_a, ell_b) on modified legs
};

LegPositions gleg_positions(const GLeg& leg);

}  // namespace treedim
