#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "treedim/tree.hpp"

namespace treedim {

enum class Model { NL, AP };

/// NL requires k separators for pairs outside the set, AP for all pairs.
struct ModelKind {
  Model model = Model::NL;
  int k = 2;
};

struct PairViolation {
  VertexId x = -1;
  VertexId y = -1;
  int separators = 0;
};

struct Verdict {
  bool valid = true;
  std::vector<PairViolation> violations;  // pairs with fewer than k separators
};

/// Definition-level check: distances from every member of `landmarks`, then a
/// separator count per required pair (stopping at k). `max_violations` caps
/// the reported list (0 = report all); the scan stops once the cap is hit.
Verdict verify_landmark(const WeightedTree& tree, std::span<const VertexId> landmarks, ModelKind model,
                        std::size_t max_violations = 0);

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotALandmarkSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BruteResult {
  bool found = false;  // false only when no subset meets the model (AP, k > 2)
  std::vector<VertexId> landmarks;  // ascending
  Cost cost;
};

inline constexpr int kDefaultBruteCap = 18;

/// Scans all 2^n subsets; ties resolve to the lexicographically smallest id
/// list. Throws TooLarge when n > cap.
BruteResult brute_min(const WeightedTree& tree, ModelKind model, int cap = kDefaultBruteCap);

/// True iff `landmarks` is valid and no single removal keeps it valid.
/// Throws NotALandmarkSet when `landmarks` is not valid to begin with.
bool is_minimal_inclusion(const WeightedTree& tree, std::span<const VertexId> landmarks, ModelKind model);

}  // namespace treedim
