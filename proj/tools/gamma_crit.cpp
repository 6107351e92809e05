// gamma-crit: command-line front end for the gammacrit library.
//
// Exit codes: 0 success, 1 counterexample or skipped instance,
// 2 usage or input error, 3 solver budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammacrit/criticality.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/error.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/graph.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/report.hpp"
#include "gammacrit/treegen.hpp"
#include "gammacrit/verify.hpp"

namespace gc = gammacrit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GraphInput {
  std::string g6;
  std::string edges_file;
  std::string family;
  std::string base;
  std::map<std::string, long long> params;
};

struct Common {
  std::uint64_t budget = 0;
  std::size_t workers = 1;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
};

void add_family_params(CLI::App* cmd, GraphInput& in) {
  for (const char* key : {"n", "k", "t", "d", "s"}) {
    cmd->add_option_function<long long>(
        std::string("--") + key, [&in, key](long long v) { in.params[key] = v; },
        std::string("family parameter ") + key);
  }
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* edges = cmd->add_option("--edges", in.edges_file, "edge-list file: n, then u v pairs")
                    ->check(CLI::ExistingFile);
  auto* fam = cmd->add_option("--family", in.family, "family id, or 'corona' with --base");
  g6->excludes(edges)->excludes(fam);
  edges->excludes(fam);
  cmd->add_option("--base", in.base, "graph6 base graph for --family corona");
  add_family_params(cmd, in);
}

gc::FamilyInstance resolve_family(const GraphInput& in) {
  if (in.family == "corona") {
    if (in.base.empty()) throw gc::Error(gc::Errc::BadParams, "--family corona needs --base");
    return gc::make_corona_k1(gc::decode_graph6(in.base), in.base);
  }
  return gc::make_family(in.family, in.params);
}

gc::Graph resolve_graph(const GraphInput& in) {
  if (!in.g6.empty()) return gc::decode_graph6(in.g6);
  if (!in.edges_file.empty()) {
    std::ifstream file(in.edges_file);
    return gc::parse_edge_list(file);
  }
  if (!in.family.empty()) return resolve_family(in).graph;
  throw gc::Error(gc::Errc::MalformedInput, "one of --g6, --edges or --family is required");
}

std::string set_text(const gc::VertexList& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string edges_text(const gc::EdgeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const gc::Edge& e : s.edges()) {
    out += (first ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out + "}";
}

std::string opt_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("undefined");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw gc::Error(gc::Errc::MalformedInput, "cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_invariants(const GraphInput& in, const Common& common) {
  const gc::Graph g = resolve_graph(in);
  gc::CriticalityOptions opts;
  opts.budget = common.budget;
  const gc::CriticalityReport r = gc::criticality_index(g, opts);
  const gc::VertexClasses classes = gc::classify_vertices(g);
  const gc::GammaResult sets = gc::all_gamma_sets(g);
  const gc::VertexList never = gc::never_vertices(g);
  const std::size_t alpha = gc::independence_number(g);
  bool all_packings = !sets.enumeration_truncated;
  for (const auto& d : sets.gamma_sets) all_packings = all_packings && gc::is_2packing(g, d);

  Output out(common.out);
  std::ostream& os = out.stream();
  if (common.format == "json") {
    json j = json::parse(gc::to_json(r));
    j["graph6"] = gc::encode_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    j["leaves"] = classes.leaves;
    j["supports"] = classes.supports;
    j["never_in_gamma_set"] = never;
    j["independence_number"] = alpha;
    j["gamma_set_count"] = sets.gamma_sets.size();
    j["gamma_sets_truncated"] = sets.enumeration_truncated;
    j["every_gamma_set_2packing"] = sets.enumeration_truncated ? json(nullptr) : json(all_packings);
    os << j.dump(2) << "\n";
  } else if (common.format == "dot") {
    gc::DotOptions dot;
    dot.first_subdivision_vertex = g.order();
    os << gc::to_dot(gc::subdivide_edges(g, r.sd_witness), dot);
  } else if (common.format == "graph6") {
    os << gc::encode_graph6(g) << "\n";
  } else {
    os << "graph6: " << gc::encode_graph6(g) << "\n"
       << "order: " << g.order() << "\n"
       << "size: " << g.size() << "\n"
       << "gamma: " << r.gamma << "\n"
       << "sd: " << opt_text(r.sd) << "\n"
       << "sd_witness: " << edges_text(r.sd_witness) << "\n"
       << "q: " << opt_text(r.q) << "\n"
       << "max_safe_set: " << edges_text(r.q_witness_safe) << "\n"
       << "leaves: " << set_text(classes.leaves) << "\n"
       << "supports: " << set_text(classes.supports) << "\n"
       << "never_in_gamma_set: " << set_text(never) << "\n"
       << "independence_number: " << alpha << "\n"
       << "gamma_set_count: " << sets.gamma_sets.size()
       << (sets.enumeration_truncated ? " (truncated)" : "") << "\n"
       << "every_gamma_set_2packing: "
       << (sets.enumeration_truncated ? "unknown" : (all_packings ? "yes" : "no")) << "\n"
       << "strategy: " << gc::to_string(r.stats.strategy) << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::vector<std::string> ids, bool all, std::optional<std::size_t> max_n,
               std::size_t pairs, const Common& common) {
  if (all) {
    ids.clear();
    for (const auto& t : gc::theorem_registry()) ids.push_back(t.id);
  }
  if (ids.empty()) throw gc::Error(gc::Errc::BadParams, "give theorem ids or --all");
  gc::VerifyConfig cfg;
  cfg.max_n = max_n;
  cfg.budget = common.budget;
  cfg.workers = common.workers;
  cfg.seed = common.seed;
  cfg.monotone_pairs = pairs;
  const auto reports = gc::run_theorems(ids, cfg);

  if (!common.out.empty()) {
    Output out(common.out);
    out.stream() << gc::to_json(reports) << "\n";
  }
  if (common.format == "json" && common.out.empty()) {
    std::cout << gc::to_json(reports) << "\n";
  } else {
    std::cout << gc::summary_table(reports);
    for (const auto& r : reports) {
      for (const auto& c : r.counterexamples) {
        std::cout << r.theorem_id << " counterexample " << c.graph6 << ": expected " << c.expected
                  << ", actual " << c.actual << "\n";
      }
      for (const auto& s : r.skipped) {
        std::cout << r.theorem_id << " skipped " << s.graph6 << ": " << s.reason << "\n";
      }
    }
  }
  for (const auto& r : reports) {
    if (r.verdict() != gc::Verdict::Pass) return kExitFinding;
  }
  return kExitOk;
}

int cmd_trees(std::size_t n, const Common& common) {
  const auto trees = gc::enumerate_trees(n);
  Output out(common.out);
  std::ostream& os = out.stream();
  if (common.format == "dot") {
    std::size_t i = 0;
    for (const auto& t : trees) {
      gc::DotOptions dot;
      dot.name = "T" + std::to_string(i++);
      os << gc::to_dot(t, dot);
    }
  } else if (common.format == "json") {
    json arr = json::array();
    for (const auto& t : trees) arr.push_back(gc::encode_graph6(t));
    os << arr.dump(2) << "\n";
  } else {
    for (const auto& t : trees) os << gc::encode_graph6(t) << "\n";
  }
  return kExitOk;
}

int cmd_family(const GraphInput& in, std::size_t f_max_n, const Common& common) {
  Output out(common.out);
  std::ostream& os = out.stream();
  if (in.family == "f") {
    const auto trees = gc::family_f_enumerate(f_max_n);
    if (common.format == "json") {
      json arr = json::array();
      for (const auto& t : trees) {
        arr.push_back({{"graph6", gc::encode_graph6(t.graph)},
                       {"a_vertices", t.a_vertices()},
                       {"b_vertices", t.b_vertices()}});
      }
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& t : trees) os << gc::encode_graph6(t.graph) << "\n";
    }
    return kExitOk;
  }
  if (in.family.empty()) throw gc::Error(gc::Errc::BadParams, "--family is required");
  const gc::FamilyInstance f = resolve_family(in);
  if (common.format == "json") {
    os << gc::to_json(f) << "\n";
  } else if (common.format == "dot") {
    gc::DotOptions dot;
    dot.name = f.family_id;
    os << gc::to_dot(f.graph, dot);
  } else if (common.format == "graph6") {
    os << gc::encode_graph6(f.graph) << "\n";
  } else {
    os << "family: " << f.family_id << "\n";
    for (const auto& [k, v] : f.params) os << "param " << k << ": " << v << "\n";
    os << "graph6: " << gc::encode_graph6(f.graph) << "\n"
       << "order: " << f.graph.order() << "\n"
       << "size: " << f.graph.size() << "\n"
       << "predicted gamma: " << opt_text(f.predicted.gamma) << "\n"
       << "predicted sd: " << opt_text(f.predicted.sd) << "\n"
       << "predicted q: " << opt_text(f.predicted.q) << "\n";
    for (const auto& [name, v] : f.labels) os << "label " << name << ": " << v << "\n";
  }
  return kExitOk;
}

int cmd_replay(const std::string& id, const std::string& g6, const Common& common) {
  gc::VerifyConfig cfg;
  cfg.budget = common.budget;
  const auto c = gc::replay_counterexample(id, g6, cfg);
  if (!c) {
    std::cout << id << " consistent on " << g6 << "\n";
    return kExitOk;
  }
  std::cout << id << " counterexample " << c->graph6 << ": expected " << c->expected
            << ", actual " << c->actual << "\n";
  return kExitFinding;
}

int exit_code_for(gc::Errc code) {
  switch (code) {
    case gc::Errc::Budget: return kExitBudget;
    case gc::Errc::EnumerationTruncated: return kExitFinding;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination-subdivision criticality computations"};
  app.require_subcommand(1);

  Common common;
  std::optional<std::uint64_t> budget_flag;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_flag, "solver-call budget per criticality computation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "text", "dot", "graph6"}));
    cmd->add_option("--out", common.out, "output file");
    cmd->add_option("--seed", common.seed, "seed for sampled corpora");
  };

  GraphInput inv_input;
  auto* invariants = app.add_subcommand("invariants", "gamma, sd, q and related sets of one graph");
  add_graph_input(invariants, inv_input);
  add_common(invariants);

  std::vector<std::string> ids;
  bool all = false;
  std::optional<std::size_t> max_n;
  std::size_t pairs = 10'000;
  auto* verify = app.add_subcommand("verify", "run theorem sweeps");
  verify->add_option("ids", ids, "theorem ids");
  verify->add_flag("--all", all, "run every registered theorem");
  verify->add_option("--max-n", max_n, "tree-corpus ceiling")->check(CLI::PositiveNumber);
  verify->add_option("--pairs", pairs, "random nested pairs for the monotonicity sweep");
  add_common(verify);

  auto* list = app.add_subcommand("theorems", "list registered theorem ids");

  std::size_t tree_n = 0;
  auto* trees = app.add_subcommand("trees", "all free trees on n vertices");
  trees->add_option("--n", tree_n, "order")->required();
  add_common(trees);

  GraphInput fam_input;
  std::size_t f_max_n = 8;
  auto* family = app.add_subcommand("family", "build a family instance; 'f' enumerates family F");
  family->add_option("--family", fam_input.family, "family id")->required();
  family->add_option("--base", fam_input.base, "graph6 base graph for corona");
  family->add_option("--max-n", f_max_n, "order ceiling for family F");
  add_family_params(family, fam_input);
  add_common(family);

  std::string replay_id;
  std::string replay_g6;
  auto* replay = app.add_subcommand("replay", "re-check one theorem on one graph6 instance");
  replay->add_option("id", replay_id, "theorem id")->required();
  replay->add_option("--g6", replay_g6, "graph6 string")->required();
  add_common(replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    common.budget = budget_flag ? *budget_flag : gc::budget_from_environment();
    if (*invariants) return cmd_invariants(inv_input, common);
    if (*verify) return cmd_verify(ids, all, max_n, pairs, common);
    if (*trees) return cmd_trees(tree_n, common);
    if (*family) return cmd_family(fam_input, f_max_n, common);
    if (*replay) return cmd_replay(replay_id, replay_g6, common);
    if (*list) {
      for (const auto& t : gc::theorem_registry()) std::cout << t.id << "  " << t.statement << "\n";
      return kExitOk;
    }
  } catch (const gc::Error& e) {
    std::cerr << "gamma-crit: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
