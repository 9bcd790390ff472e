#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "treedim/topology.hpp"

namespace treedim {

/// Solution types for the restriction of a vertex set to one g-leg.
/// S* apply to standard legs, M* to modified legs.
enum class SolutionType { S0, S1, S2, S3, M1, M2, M3, Invalid };

inline constexpr std::size_t kSolutionTypeCount = 7;  // excluding Invalid

std::string_view to_string(SolutionType t);

class VertexNotOnLeg : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What the typing rules need to know about a selection on one leg.
struct LegSelectionProfile {
  int size = 0;
  bool has_position_one = false;  // standard legs
  bool has_ell = false;           // modified legs: contains ell_a or ell_b
  int beyond_ell = 0;             // modified legs: members at position >= i + 2
};

SolutionType type_from_profile(LegKind kind, const LegSelectionProfile& profile);

/// Throws VertexNotOnLeg if some member of `subset` is not a vertex of `leg`.
SolutionType type_of_solution(const GLeg& leg, std::span<const VertexId> subset);

/// A thrifty representative: at most two vertices.
struct LegChoice {
  std::array<VertexId, 2> members{-1, -1};
  int count = 0;
  Cost cost;

  std::span<const VertexId> vertices() const { return {members.data(), static_cast<std::size_t>(count)}; }
};

/// Minimum-cost representative per solution type; empty where the type is
/// not available on this leg.
struct LegSolutionTable {
  std::array<std::optional<LegChoice>, kSolutionTypeCount> by_type;

  const std::optional<LegChoice>& operator[](SolutionType t) const {
    return by_type[static_cast<std::size_t>(t)];
  }
  std::optional<LegChoice>& operator[](SolutionType t) { return by_type[static_cast<std::size_t>(t)]; }
};

/// Linear in the leg length. Cost ties resolve to the lower vertex id.
LegSolutionTable min_cost_solutions(const GLeg& leg, const WeightedTree& tree);

struct TypedLegSolution {
  std::size_t leg_index = 0;  // into the core's g-leg list
  VertexId root = -1;
  LegKind kind = LegKind::ShortStandard;
  std::vector<VertexId> vertices;
  SolutionType type = SolutionType::Invalid;
  Cost cost;
};

struct LocalSetAssignment {
  VertexId core = -1;
  std::vector<TypedLegSolution> legs;

  Cost cost() const;
  std::vector<VertexId> vertices() const;
};

/// Local-set conditions 1..5 over leg kinds and their types. Returns the
/// violated condition numbers in ascending order.
std::vector<int> local_set_violations(std::span<const LegKind> kinds, std::span<const SolutionType> types);

struct LocalSetCheck {
  bool ok = false;
  std::vector<SolutionType> types;  // per leg, in input order
  std::vector<int> violated;        // condition numbers
};

/// Types the restriction of `subset` to each leg and checks the local-set
/// conditions. Members of `subset` that lie on none of the legs are ignored.
LocalSetCheck is_local_set(std::span<const GLeg> legs, std::span<const VertexId> subset);

/// Every S2/M2/M3 solution has exactly two vertices.
bool is_thrifty(const LocalSetAssignment& assignment);

}  // namespace treedim
