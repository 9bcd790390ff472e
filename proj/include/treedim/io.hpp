#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "treedim/solver.hpp"
#include "treedim/topology.hpp"
#include "treedim/tree.hpp"

namespace treedim {

/// Malformed or invalid tree file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Tree file format:
///   n
///   c_0 c_1 ... c_{n-1}     (integers or p/q, may wrap over several lines)
///   u v                     (n - 1 edge lines, 0-based ids)
/// Lines whose first non-blank character is '#' are comments.
WeightedTree parse_tree_file(std::istream& in);
WeightedTree parse_tree_text(const std::string& text);
WeightedTree read_tree_file(const std::string& path);

/// Canonical form: one cost line, edges as sorted (min, max) pairs.
std::string emit_tree_file(const WeightedTree& tree);

/// JSON result document; keys appear in a fixed order.
std::string result_document(const WeightedTree& tree, const LandmarkResult& result, int indent = 2);

/// Plain-text summary; with `explain`, one line per core and leg choice.
std::string result_text(const WeightedTree& tree, const LandmarkResult& result, bool explain);

std::string topology_text(const WeightedTree& tree, const Topology& topo);
std::string topology_dot(const WeightedTree& tree, const Topology& topo);

}  // namespace treedim
