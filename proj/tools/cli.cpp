#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "treedim/generators.hpp"
#include "treedim/io.hpp"
#include "treedim/oracle.hpp"
#include "treedim/solver.hpp"

namespace treedim::cli {
namespace {

ModelKind parse_model(const std::string& name, int k) {
  if (k < 1) throw std::invalid_argument("--k must be positive");
  if (name == "nl") return {Model::NL, k};
  if (name == "ap") return {Model::AP, k};
  throw std::invalid_argument("--model must be 'nl' or 'ap'");
}

std::vector<VertexId> parse_id_list(const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad landmark id '" + item + "'");
    ids.push_back(static_cast<VertexId>(value));
  }
  return ids;
}

std::vector<long> parse_sizes(const std::string& text) {
  std::vector<long> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long value = std::stol(item, &used);
    if (used != item.size() || value < 1) throw std::invalid_argument("bad size '" + item + "'");
    sizes.push_back(value);
  }
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  return sizes;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("TREEDIM_SEED"); env != nullptr && *env != '\0') {
    return std::stoull(env);
  }
  return flag_seed;
}

std::string join(std::span<const VertexId> ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
  return s;
}

struct Options {
  std::string file;
  bool json = false;
  bool explain = false;
  bool dot = false;
  std::string landmarks;
  int k = 2;
  std::string model = "nl";
  int cap = kDefaultBruteCap;
  std::string kind = "random";
  long n = 0;
  std::uint64_t seed = 1;
  std::string costs = "unit";
  std::string cost_file;
  std::string output;
  std::string sizes = "100000,1000000";
  std::string bench_kinds = "caterpillar,random";
  int repeats = 3;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const WeightedTree tree = read_tree_file(o.file);
  const LandmarkResult result = solve(tree);
  if (o.json) {
    out << result_document(tree, result) << '\n';
  } else {
    out << result_text(tree, result, o.explain);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const WeightedTree tree = read_tree_file(o.file);
  const auto model = parse_model(o.model, o.k);
  const auto ids = parse_id_list(o.landmarks);
  for (const VertexId v : ids) {
    if (v < 0 || v >= tree.size()) {
      throw std::out_of_range("landmark " + std::to_string(v) + " is outside [0, " + std::to_string(tree.size()) + ")");
    }
  }
  const Verdict verdict = verify_landmark(tree, ids, model, 20);
  if (verdict.valid) {
    out << "valid\n";
    return kExitOk;
  }
  out << "invalid\n";
  for (const auto& v : verdict.violations) {
    out << "  pair (" << v.x << "," << v.y << ") has " << v.separators << " separator(s), needs " << model.k << '\n';
  }
  if (verdict.violations.size() == 20) out << "  ...\n";
  return kExitInvalid;
}

int cmd_brute(const Options& o, std::ostream& out) {
  const WeightedTree tree = read_tree_file(o.file);
  const auto model = parse_model(o.model, o.k);
  const BruteResult best = brute_min(tree, model, o.cap);
  if (!best.found) {
    out << "no landmark set exists\n";
    return kExitInvalid;
  }
  out << "cost: " << best.cost << '\n';
  out << "landmarks: " << join(best.landmarks) << '\n';
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const WeightedTree tree = read_tree_file(o.file);
  const Topology topo = classify(tree);
  out << (o.dot ? topology_dot(tree, topo) : topology_text(tree, topo));
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 100'000'000) throw std::invalid_argument("--n must be in [1, 1e8]");
  const auto n = static_cast<VertexId>(o.n);
  Rng rng(effective_seed(o.seed));
  auto edges = generate_edges(parse_gen_kind(o.kind), n, rng);
  std::vector<Cost> costs;
  if (o.costs == "unit") {
    costs = unit_costs(n);
  } else if (o.costs == "random") {
    costs = random_costs(n, rng);
  } else if (o.costs == "file") {
    std::ifstream in(o.cost_file);
    if (!in) throw std::invalid_argument("--costs file needs a readable --cost-file");
    std::string tok;
    while (in >> tok) costs.push_back(Cost::parse(tok));
    if (costs.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("cost file holds " + std::to_string(costs.size()) + " costs, expected " +
                                  std::to_string(n));
    }
  } else {
    throw std::invalid_argument("--costs must be unit, random or file");
  }
  const std::string text = emit_tree_file(build_tree(n, std::move(edges), std::move(costs)));
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!(file << text)) throw std::invalid_argument("cannot write '" + o.output + "'");
  }
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto sizes = parse_sizes(o.sizes);
  std::vector<std::string> kinds;
  std::stringstream ss(o.bench_kinds);
  for (std::string k; std::getline(ss, k, ',');) {
    parse_gen_kind(k);
    kinds.push_back(k);
  }
  out << std::left << std::setw(12) << "kind" << std::setw(12) << "n" << std::setw(14) << "wall_ms"
      << "ns_per_vertex\n";
  for (const auto& kind : kinds) {
    for (const long size : sizes) {
      Rng rng(effective_seed(o.seed));
      const auto n = static_cast<VertexId>(size);
      auto edges = generate_edges(parse_gen_kind(kind), n, rng);
      const WeightedTree tree = build_tree(n, std::move(edges), random_costs(n, rng));
      std::vector<double> times;
      for (int r = 0; r < std::max(1, o.repeats); ++r) {
        const auto start = std::chrono::steady_clock::now();
        const LandmarkResult result = solve(tree);
        const auto stop = std::chrono::steady_clock::now();
        if (result.landmarks.empty() && n > 1) throw std::logic_error("solver returned no landmarks");
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      }
      std::sort(times.begin(), times.end());
      const double median = times[times.size() / 2];
      out << std::left << std::setw(12) << kind << std::setw(12) << size << std::setw(14) << std::fixed
          << std::setprecision(3) << median << std::setprecision(1) << median * 1e6 / static_cast<double>(size)
          << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-cost landmark sets of vertex-weighted trees (NL model, k = 2)", "treedim"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum-cost landmark set");
  solve_cmd->add_option("file", o.file, "Tree file")->required();
  solve_cmd->add_flag("--json", o.json, "Print the JSON result document");
  solve_cmd->add_flag("--explain", o.explain, "List per-core leg choices");

  auto* verify_cmd = app.add_subcommand("verify", "Check a landmark set by definition");
  verify_cmd->add_option("file", o.file, "Tree file")->required();
  verify_cmd->add_option("--landmarks", o.landmarks, "Comma-separated vertex ids")->required();
  verify_cmd->add_option("--k", o.k, "Required separators per pair");
  verify_cmd->add_option("--model", o.model, "nl or ap");

  auto* brute_cmd = app.add_subcommand("brute", "Exhaustive minimum (small trees only)");
  brute_cmd->add_option("file", o.file, "Tree file")->required();
  brute_cmd->add_option("--k", o.k, "Required separators per pair");
  brute_cmd->add_option("--model", o.model, "nl or ap");
  brute_cmd->add_option("--cap", o.cap, "Largest n accepted");

  auto* classify_cmd = app.add_subcommand("classify", "Show vertex classes, g-legs and the case tag");
  classify_cmd->add_option("file", o.file, "Tree file")->required();
  classify_cmd->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of text");

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated tree file");
  gen_cmd->add_option("--kind", o.kind, "path|star|spider|caterpillar|double-spider|random");
  gen_cmd->add_option("--n", o.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", o.seed, "RNG seed (TREEDIM_SEED overrides)");
  gen_cmd->add_option("--costs", o.costs, "unit|random|file");
  gen_cmd->add_option("--cost-file", o.cost_file, "Cost tokens for --costs file");
  gen_cmd->add_option("-o,--output", o.output, "Output path (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Time solve() on generated trees");
  bench_cmd->add_option("--sizes", o.sizes, "Comma-separated vertex counts");
  bench_cmd->add_option("--kinds", o.bench_kinds, "Comma-separated generator kinds");
  bench_cmd->add_option("--repeats", o.repeats, "Timed runs per size (median reported)");
  bench_cmd->add_option("--seed", o.seed, "RNG seed (TREEDIM_SEED overrides)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*brute_cmd) return cmd_brute(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*bench_cmd) return cmd_bench(o, out);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace treedim::cli
