#include "treedim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace treedim {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_integer(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", found '" + tok + "'");
  }
  return value;
}

}  // namespace

WeightedTree parse_tree_file(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty tree file");

  const Line& header = lines.front();
  if (header.tokens.size() != 1) throw ParseError(header.number, "first line must hold only the vertex count");
  const long long n = parse_integer(header.tokens[0], header.number, "vertex count");
  if (n < 1 || n > 100'000'000) throw ParseError(header.number, "vertex count must be in [1, 1e8]");

  std::vector<Cost> costs;
  costs.reserve(static_cast<std::size_t>(n));
  std::size_t li = 1;
  for (; li < lines.size() && costs.size() < static_cast<std::size_t>(n); ++li) {
    for (const auto& tok : lines[li].tokens) {
      if (costs.size() == static_cast<std::size_t>(n)) {
        throw ParseError(lines[li].number, "more than n = " + std::to_string(n) + " cost tokens");
      }
      if (!tok.empty() && tok.front() == '-') {
        throw TreeError(TreeErrorKind::NegativeCost,
                        "line " + std::to_string(lines[li].number) + ": vertex " + std::to_string(costs.size()) +
                            " has negative cost '" + tok + "'",
                        -1, static_cast<long>(costs.size()));
      }
      try {
        costs.push_back(Cost::parse(tok));
      } catch (const std::exception& e) {
        throw ParseError(lines[li].number, e.what());
      }
    }
  }
  if (costs.size() != static_cast<std::size_t>(n)) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " cost tokens, found " +
                                              std::to_string(costs.size()));
  }

  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  for (; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    const auto a = parse_integer(line.tokens[0], line.number, "vertex id");
    const auto b = parse_integer(line.tokens[1], line.number, "vertex id");
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError(line.number, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    edge_lines.push_back(line.number);
  }
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw ParseError(lines.back().number, "expected n-1 = " + std::to_string(n - 1) + " edges, found " +
                                              std::to_string(edges.size()));
  }

  try {
    return build_tree(static_cast<VertexId>(n), std::move(edges), std::move(costs));
  } catch (const TreeError& e) {
    const int line = e.edge() >= 0 ? edge_lines[static_cast<std::size_t>(e.edge())] : 0;
    throw ParseError(line, e.what());
  }
}

WeightedTree parse_tree_text(const std::string& text) {
  std::istringstream in(text);
  return parse_tree_file(in);
}

WeightedTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_tree_file(in);
}

std::string emit_tree_file(const WeightedTree& tree) {
  std::ostringstream out;
  out << tree.size() << '\n';
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v > 0) out << ' ';
    out << tree.cost(v);
  }
  out << '\n';
  for (const auto& [a, b] : tree.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::string result_document(const WeightedTree& tree, const LandmarkResult& result, int indent) {
  nlohmann::ordered_json doc;
  doc["n"] = tree.size();
  doc["case_tag"] = std::string(to_string(result.case_tag));
  doc["landmarks"] = result.landmarks;
  doc["cost"] = result.cost.to_string();
  auto per_core = nlohmann::ordered_json::array();
  for (const auto& a : result.explanation) {
    nlohmann::ordered_json core;
    core["core"] = a.core;
    auto legs = nlohmann::ordered_json::array();
    for (const auto& leg : a.legs) {
      nlohmann::ordered_json l;
      l["root"] = leg.root;
      l["kind"] = std::string(to_string(leg.kind));
      l["solution_type"] = std::string(to_string(leg.type));
      l["vertices"] = leg.vertices;
      legs.push_back(std::move(l));
    }
    core["legs"] = std::move(legs);
    per_core.push_back(std::move(core));
  }
  doc["per_core"] = std::move(per_core);
  if (result.added_core_vertex) doc["added_core_vertex"] = *result.added_core_vertex;
  return doc.dump(indent);
}

std::string result_text(const WeightedTree& tree, const LandmarkResult& result, bool explain) {
  std::ostringstream out;
  out << "n: " << tree.size() << '\n';
  out << "case: " << to_string(result.case_tag) << '\n';
  out << "cost: " << result.cost << '\n';
  out << "landmarks:";
  for (const VertexId v : result.landmarks) out << ' ' << v;
  out << '\n';
  if (!explain) return out.str();
  for (const auto& a : result.explanation) {
    out << "core " << a.core << " (cost " << a.cost() << ")\n";
    for (const auto& leg : a.legs) {
      out << "  leg@" << leg.root << ' ' << to_string(leg.kind) << ' ' << to_string(leg.type) << " {";
      for (std::size_t i = 0; i < leg.vertices.size(); ++i) out << (i ? "," : "") << leg.vertices[i];
      out << "} cost " << leg.cost << '\n';
    }
  }
  if (result.added_core_vertex) out << "added core vertex: " << *result.added_core_vertex << '\n';
  return out.str();
}

std::string topology_text(const WeightedTree& tree, const Topology& topo) {
  std::ostringstream out;
  out << "case_tag=" << to_string(topo.case_tag) << '\n';
  out << "vertex degree class\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    out << v << ' ' << tree.degree(v) << ' ' << to_string(topo.classes[v]) << '\n';
  }
  for (const auto& core : topo.cores) {
    out << "core " << core.id << ' ' << to_string(topo.classes[core.id]) << " glegs=" << core.glegs.size()
        << " other_subtrees=" << core.non_gleg_subtrees << '\n';
    for (const auto& leg : core.glegs) {
      out << "  leg@" << leg.root << ' ' << to_string(leg.kind) << " [";
      for (std::size_t j = 0; j < leg.vertices.size(); ++j) {
        out << (j ? " " : "") << leg.vertices[j] << ':' << leg.positions[j];
      }
      out << ']';
      if (leg.kind == LegKind::Modified) {
        out << " small_core=" << leg.small_core << '@' << leg.small_core_position << " ell_a=" << leg.ell_a
            << " ell_b=" << leg.ell_b;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string topology_dot(const WeightedTree& tree, const Topology& topo) {
  auto color = [](VertexClass c) {
    switch (c) {
      case VertexClass::SmallCore: return "#f4a261";
      case VertexClass::MinorCore: return "#e9c46a";
      case VertexClass::MainCore: return "#e76f51";
      case VertexClass::PathVertex: return "#a8dadc";
      default: return "#d0d0d0";
    }
  };
  std::ostringstream out;
  out << "graph tree {\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    out << "  " << v << " [style=filled, fillcolor=\"" << color(topo.classes[v]) << "\", label=\"" << v << "\\n"
        << tree.cost(v) << "\"]\n";
  }
  for (const auto& [a, b] : tree.edges()) out << "  " << a << " -- " << b << '\n';
  out << "}\n";
  return out.str();
}

}  // namespace treedim
