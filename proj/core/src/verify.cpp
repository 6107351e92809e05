#include "gammacrit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/error.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/treegen.hpp"

namespace gammacrit {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Incomplete: return "incomplete";
  }
  return "unknown";
}

// ---------------------------------------------------------------- analysis

InstanceAnalysis analyze_instance(const Graph& g, const VerifyConfig& cfg, std::string label) {
  InstanceAnalysis an;
  an.graph = g;
  an.graph6 = encode_graph6(g);
  an.label = std::move(label);
  if (is_tree(g)) an.tree_code = canonical_code(g).bytes;
  try {
    CriticalityOptions opts;
    opts.budget = cfg.budget;
    an.criticality = criticality_index(g, opts);
    an.gamma_sets = all_gamma_sets(g);
    an.never = never_vertices(g);
  } catch (const Error& e) {
    an.failure = e.what();
  }
  return an;
}

struct AnalysisCache::Impl {
  std::mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const InstanceAnalysis>> by_graph6;
};

AnalysisCache::AnalysisCache() : impl_(std::make_unique<Impl>()) {}
AnalysisCache::~AnalysisCache() = default;

std::vector<std::shared_ptr<const InstanceAnalysis>> AnalysisCache::analyze(
    std::span<const Graph> corpus, std::span<const std::string> labels, const VerifyConfig& cfg) {
  std::vector<std::shared_ptr<const InstanceAnalysis>> out(corpus.size());
  std::vector<std::size_t> missing;
  {
    std::lock_guard lock(impl_->mutex);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto it = impl_->by_graph6.find(encode_graph6(corpus[i]));
      if (it != impl_->by_graph6.end()) {
        out[i] = it->second;
      } else {
        missing.push_back(i);
      }
    }
  }

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k = cursor++; k < missing.size(); k = cursor++) {
      const std::size_t i = missing[k];
      out[i] = std::make_shared<const InstanceAnalysis>(
          analyze_instance(corpus[i], cfg, i < labels.size() ? labels[i] : std::string{}));
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, missing.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::lock_guard lock(impl_->mutex);
  for (std::size_t i : missing) impl_->by_graph6.emplace(out[i]->graph6, out[i]);
  return out;
}

// --------------------------------------------------------------- predicates

TwoCriticalPredicate evaluate_two_critical_predicate(const Graph& t,
                                                     std::span<const VertexList> gamma_sets) {
  const auto dist = distance_matrix(t);
  TwoCriticalPredicate p;
  p.all_bounded_heavy_pairs = true;
  p.all_single_heavy_pair = true;
  std::vector<bool> in(t.order());
  for (const VertexList& d : gamma_sets) {
    std::fill(in.begin(), in.end(), false);
    for (Vertex v : d) in[v] = true;
    auto outside = [&](Vertex v) {
      std::size_t c = 0;
      for (Vertex w : t.neighbours(v)) c += in[w] ? 0 : 1;
      return c;
    };
    std::size_t close_pairs = 0;
    std::size_t heavy_pairs = 0;
    bool close_pair_not_heavy = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const std::size_t dd = dist[d[i]][d[j]];
        if (dd < 1 || dd > 2) continue;
        ++close_pairs;
        const bool heavy = outside(d[i]) >= 2 && outside(d[j]) >= 2;
        if (heavy) {
          ++heavy_pairs;
        } else {
          close_pair_not_heavy = true;
        }
      }
    }
    if (close_pairs == 1) p.exists_single_close_pair = true;
    if (heavy_pairs > 1) p.all_bounded_heavy_pairs = false;
    if (close_pairs > 1 || close_pair_not_heavy) p.all_single_heavy_pair = false;
  }
  return p;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CorpusItem {
  Graph graph;
  std::string label;
  std::optional<FamilyInstance> family;
};

struct Corpus {
  std::string description;
  std::vector<CorpusItem> items;
};

struct Context {
  std::set<std::string> family_f_codes;
  std::set<std::string> extremal_codes;
  std::map<std::size_t, std::string> path_codes;
};

enum class Outcome { Consistent, Discrepancy, Skip };

struct Check {
  Outcome outcome = Outcome::Consistent;
  std::string expected;
  std::string actual;

  static Check ok() { return {}; }
  static Check skip(std::string why) { return {Outcome::Skip, std::move(why), {}}; }
  static Check iff(bool lhs, bool rhs, const std::string& lhs_name, const std::string& rhs_name) {
    if (lhs == rhs) return ok();
    return {Outcome::Discrepancy, rhs_name + "=" + (rhs ? "true" : "false"),
            lhs_name + "=" + (lhs ? "true" : "false")};
  }
};

using Predicate = std::function<Check(const InstanceAnalysis&, const CorpusItem&, const Context&)>;

struct NamedPredicate {
  std::string name;
  Predicate predicate;
  /// Discrepancies become notes, not counterexamples.
  bool advisory = false;
};

std::optional<Check> needs_criticality(const InstanceAnalysis& an) {
  if (an.failure) return Check::skip(*an.failure);
  if (!an.criticality) return Check::skip("no criticality report");
  return std::nullopt;
}

std::optional<Check> needs_gamma_sets(const InstanceAnalysis& an) {
  if (auto c = needs_criticality(an)) return c;
  if (an.gamma_sets.enumeration_truncated) return Check::skip("gamma-set enumeration truncated");
  return std::nullopt;
}

std::string fmt_opt(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("undefined");
}

// Each predicate compares the two sides of one statement on one instance.

Check rad_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_gamma_sets(an)) return *c;
  const bool one_critical = an.criticality->q == std::size_t{1};
  const bool all_packings = std::all_of(
      an.gamma_sets.gamma_sets.begin(), an.gamma_sets.gamma_sets.end(),
      [&](const VertexList& d) { return is_2packing(an.graph, d); });
  return Check::iff(one_critical, all_packings, "q==1", "every gamma-set is a 2-packing");
}

Check two_critical_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_gamma_sets(an)) return *c;
  const bool two_critical = an.criticality->q == std::size_t{2};
  const auto p = evaluate_two_critical_predicate(an.graph, an.gamma_sets.gamma_sets);
  return Check::iff(two_critical, p.literal(), "q==2", "characterization(literal)");
}

Check two_critical_alternative_predicate(const InstanceAnalysis& an, const CorpusItem&,
                                         const Context&) {
  if (auto c = needs_gamma_sets(an)) return *c;
  const bool two_critical = an.criticality->q == std::size_t{2};
  const auto p = evaluate_two_critical_predicate(an.graph, an.gamma_sets.gamma_sets);
  return Check::iff(two_critical, p.alternative(), "q==2", "characterization(alternative)");
}

Check bounds_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_criticality(an)) return *c;
  const auto& q = an.criticality->q;
  const std::size_t n = an.graph.order();
  if (q && *q >= 1 && *q <= n - 1) return Check::ok();
  return {Outcome::Discrepancy, "1 <= q <= " + std::to_string(n - 1), "q=" + fmt_opt(q)};
}

Check extremal_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context& ctx) {
  if (auto c = needs_criticality(an)) return *c;
  if (!an.tree_code) return Check::skip("not a tree");
  const bool extremal = an.criticality->q == an.graph.order() - 1;
  const bool corona_star = ctx.extremal_codes.contains(*an.tree_code);
  return Check::iff(extremal, corona_star, "q==n-1", "T is K_{1,r} corona K_1");
}

Check sd_range_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_criticality(an)) return *c;
  const auto& sd = an.criticality->sd;
  if (sd && *sd >= 1 && *sd <= 3) return Check::ok();
  return {Outcome::Discrepancy, "sd in {1,2,3}", "sd=" + fmt_opt(sd)};
}

Check sd1_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_criticality(an)) return *c;
  std::vector<bool> never(an.graph.order(), false);
  for (Vertex v : an.never) never[v] = true;
  bool condition = false;
  for (Vertex v = 0; v < an.graph.order(); ++v) {
    if (never[v] && an.graph.degree(v) == 1) condition = true;
  }
  for (const Edge& e : an.graph.edges()) {
    if (never[e.u] && never[e.v]) condition = true;
  }
  return Check::iff(an.criticality->sd == std::size_t{1}, condition, "sd==1",
                    "leaf in N(T) or edge inside N(T)");
}

Check sd3_family_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context& ctx) {
  if (auto c = needs_criticality(an)) return *c;
  if (!an.tree_code) return Check::skip("not a tree");
  return Check::iff(an.criticality->sd == std::size_t{3}, ctx.family_f_codes.contains(*an.tree_code),
                    "sd==3", "T in family F");
}

bool is_path_with_residue(const InstanceAnalysis& an, const Context& ctx, std::size_t residue) {
  const std::size_t n = an.graph.order();
  if (!an.tree_code || n % 3 != residue) return false;
  auto it = ctx.path_codes.find(n);
  return it != ctx.path_codes.end() && it->second == *an.tree_code;
}

Check sd2_path_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context& ctx) {
  if (auto c = needs_criticality(an)) return *c;
  const bool both = an.criticality->q == std::size_t{2} && an.criticality->sd == std::size_t{2};
  return Check::iff(both, is_path_with_residue(an, ctx, 2), "q==2 && sd==2", "T is P_{3k+2}");
}

Check sd3_path_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context& ctx) {
  if (auto c = needs_criticality(an)) return *c;
  const bool both = an.criticality->q == std::size_t{3} && an.criticality->sd == std::size_t{3};
  return Check::iff(both, is_path_with_residue(an, ctx, 1), "q==3 && sd==3", "T is P_{3k+1}");
}

Check neighbour_bound_predicate(const InstanceAnalysis& an, const CorpusItem&, const Context&) {
  if (auto c = needs_gamma_sets(an)) return *c;
  if (!an.criticality->q) return Check::skip("q undefined");
  const std::size_t q = *an.criticality->q;
  const BitGraph bg(an.graph);
  std::size_t worst = 0;
  for (const VertexList& d : an.gamma_sets.gamma_sets) {
    const VertexMask dm = to_mask(d, an.graph.order());
    for (std::size_t v = 0; v < an.graph.order(); ++v) {
      if (dm & bit(v)) continue;
      worst = std::max(worst, static_cast<std::size_t>(std::popcount(bg.open(v) & dm)));
    }
  }
  if (worst <= q) return Check::ok();
  return {Outcome::Discrepancy, "max |N_D(v)| <= q=" + std::to_string(q),
          "max |N_D(v)|=" + std::to_string(worst)};
}

Check prediction_predicate(const InstanceAnalysis& an, const CorpusItem& item, const Context&) {
  if (!item.family) return Check::skip("no family prediction attached");
  const std::size_t n = an.graph.order();
  if (n < 3) return Check::skip("excluded: order " + std::to_string(n) + " < 3");
  if (auto c = needs_criticality(an)) return *c;
  const Prediction& p = item.family->predicted;
  const CriticalityReport& r = *an.criticality;
  std::string expected;
  std::string actual;
  bool match = true;
  auto compare = [&](const char* name, const std::optional<std::size_t>& want,
                     const std::optional<std::size_t>& got) {
    if (!want) return;
    expected += std::string(expected.empty() ? "" : " ") + name + "=" + std::to_string(*want);
    actual += std::string(actual.empty() ? "" : " ") + name + "=" + fmt_opt(got);
    if (got != want) match = false;
  };
  compare("gamma", p.gamma, r.gamma);
  compare("sd", p.sd, r.sd);
  compare("q", p.q, r.q);
  if (match) return Check::ok();
  return {Outcome::Discrepancy, expected, actual};
}

Check unique_v1_predicate(const InstanceAnalysis& an, const CorpusItem& item, const Context&) {
  if (!item.family) return Check::skip("no family labels attached");
  if (auto s = needs_gamma_sets(an)) return *s;
  const auto& labels = item.family->labels;
  VertexList v1{labels.at("v_1"), labels.at("v_2"), labels.at("v_3")};
  std::sort(v1.begin(), v1.end());
  const auto& sets = an.gamma_sets.gamma_sets;
  if (sets.size() == 1 && sets.front() == v1) return Check::ok();
  return {Outcome::Discrepancy, "unique gamma-set V_1",
          std::to_string(sets.size()) + " gamma-sets"};
}

// ------------------------------------------------------------------ corpora

std::size_t ceiling(const VerifyConfig& cfg, std::size_t fallback) {
  return cfg.max_n.value_or(fallback);
}

Corpus tree_corpus(std::size_t lo, std::size_t hi) {
  Corpus c;
  c.description = "all free trees, " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
  if (hi < lo) return c;
  for (Graph& t : enumerate_trees(lo, hi)) c.items.push_back({std::move(t), {}, std::nullopt});
  return c;
}

void add_family(Corpus& c, FamilyInstance f) {
  std::string label = f.family_id;
  for (const auto& [k, v] : f.params) label += " " + k + "=" + std::to_string(v);
  for (const auto& tag : f.tags) {
    if (tag.starts_with("base=")) label += " " + tag;
  }
  Graph g = f.graph;
  c.items.push_back({std::move(g), std::move(label), std::move(f)});
}

Corpus paths_cycles_corpus() {
  Corpus c{"P_n and C_n, 3 <= n <= 13", {}};
  for (std::size_t n = 3; n <= 13; ++n) add_family(c, make_path(n));
  for (std::size_t n = 3; n <= 13; ++n) add_family(c, make_cycle(n));
  return c;
}

Corpus universal_corpus() {
  Corpus c{"K_{1,t} (2<=t<=6), K_n (3<=n<=6), wheels (rim 3..6)", {}};
  for (std::size_t t = 2; t <= 6; ++t) add_family(c, make_star(t));
  for (std::size_t n = 3; n <= 6; ++n) add_family(c, make_complete(n));
  for (std::size_t r = 3; r <= 6; ++r) add_family(c, make_wheel(r));
  return c;
}

Corpus bipartite_corpus() {
  Corpus c{"K_{2,t} (2<=t<=5) and K_{s,t} (3<=s<=t<=5)", {}};
  for (std::size_t t = 2; t <= 5; ++t) add_family(c, make_complete_bipartite(2, t));
  for (std::size_t s = 3; s <= 5; ++s) {
    for (std::size_t t = s; t <= 5; ++t) add_family(c, make_complete_bipartite(s, t));
  }
  return c;
}

Corpus spider_corpus(std::size_t max_t) {
  Corpus c{"wounded spiders S_{t,t-d}, 1 <= d <= t <= " + std::to_string(max_t), {}};
  for (std::size_t t = 1; t <= max_t; ++t) {
    for (std::size_t d = 1; d <= t; ++d) add_family(c, make_wounded_spider(t, d));
  }
  return c;
}

Corpus g_k_corpus(std::size_t max_k) {
  Corpus c{"G_k, 1 <= k <= " + std::to_string(max_k), {}};
  for (std::size_t k = 1; k <= max_k; ++k) add_family(c, make_g_k(k));
  return c;
}

Corpus a_k_corpus(std::size_t max_k) {
  Corpus c{"A_k, 0 <= k <= " + std::to_string(max_k), {}};
  for (std::size_t k = 0; k <= max_k; ++k) add_family(c, make_a_k(k));
  return c;
}

Corpus corona_corpus() {
  Corpus c{"G corona K_1 for G in {P_2,P_3,P_4,C_3,C_4,K_{1,3},K_4} and all trees 2 <= n <= 5",
           {}};
  add_family(c, make_corona_k1(make_path(2).graph, "P_2"));
  add_family(c, make_corona_k1(make_path(3).graph, "P_3"));
  add_family(c, make_corona_k1(make_path(4).graph, "P_4"));
  add_family(c, make_corona_k1(make_cycle(3).graph, "C_3"));
  add_family(c, make_corona_k1(make_cycle(4).graph, "C_4"));
  add_family(c, make_corona_k1(make_star(3).graph, "K_{1,3}"));
  add_family(c, make_corona_k1(make_complete(4).graph, "K_4"));
  for (Graph& t : enumerate_trees(2, 5)) add_family(c, make_corona_k1(t, encode_graph6(t)));
  return c;
}

Corpus neighbour_bound_corpus(std::size_t hi) {
  Corpus c = tree_corpus(3, hi);
  c.description += ", plus path/cycle, K_{s,t}, universal-vertex and G_k fixtures";
  for (Corpus extra : {paths_cycles_corpus(), bipartite_corpus(), universal_corpus(), g_k_corpus(3)}) {
    for (auto& item : extra.items) c.items.push_back(std::move(item));
  }
  return c;
}

Context build_context(const Corpus& corpus) {
  Context ctx;
  std::size_t max_order = 0;
  for (const auto& item : corpus.items) max_order = std::max(max_order, item.graph.order());
  if (max_order >= 4) {
    for (const StatusTree& t : family_f_enumerate(max_order)) {
      ctx.family_f_codes.insert(canonical_code(t.graph).bytes);
    }
  }
  for (std::size_t r = 1; 2 * r + 2 <= max_order; ++r) {
    ctx.extremal_codes.insert(canonical_code(make_corona_k1(make_star(r).graph).graph).bytes);
  }
  for (std::size_t n = 1; n <= max_order; ++n) {
    ctx.path_codes[n] = canonical_code(make_path(n).graph).bytes;
  }
  return ctx;
}

TheoremReport evaluate(const std::string& id, const std::string& statement, const Corpus& corpus,
                       const std::vector<NamedPredicate>& predicates, const VerifyConfig& cfg,
                       AnalysisCache& cache) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem_id = id;
  report.statement = statement;
  report.corpus_description = corpus.description;

  std::vector<Graph> graphs;
  std::vector<std::string> labels;
  for (const auto& item : corpus.items) {
    graphs.push_back(item.graph);
    labels.push_back(item.label);
  }
  const auto analyses = cache.analyze(graphs, labels, cfg);
  const Context ctx = build_context(corpus);

  std::vector<std::size_t> discrepancies(predicates.size(), 0);
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    const InstanceAnalysis& an = *analyses[i];
    const CorpusItem& item = corpus.items[i];
    bool skipped = false;
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      const NamedPredicate& np = predicates[p];
      Check c = np.predicate(an, item, ctx);
      if (c.outcome == Outcome::Discrepancy) ++discrepancies[p];
      const std::string prefix = predicates.size() > 1 ? "[" + np.name + "] " : "";
      if (c.outcome == Outcome::Skip) {
        if (c.expected.starts_with("excluded:")) {
          report.notes.push_back(item.label + " (" + an.graph6 + ") " + c.expected);
        } else {
          report.skipped.push_back({an.graph6, prefix + c.expected});
        }
        skipped = true;
      } else if (c.outcome == Outcome::Discrepancy && np.advisory) {
        report.notes.push_back(prefix + an.graph6 + ": expected " + c.expected + ", actual " +
                               c.actual);
      } else if (c.outcome == Outcome::Discrepancy) {
        std::string where = item.label.empty() ? "" : " (" + item.label + ")";
        report.counterexamples.push_back({an.graph6, prefix + c.expected + where, c.actual});
      }
    }
    if (!skipped) ++report.instances_checked;
  }
  if (predicates.size() > 1) {
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      report.notes.push_back("[" + predicates[p].name + "]" +
                             (predicates[p].advisory ? " (advisory)" : "") + " " +
                             std::to_string(discrepancies[p]) + " discrepancies over " +
                             std::to_string(corpus.items.size()) + " instances");
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::string describe_edges(const Graph& g, std::uint64_t mask) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mask >> i & 1U) {
      if (s.size() > 1) s += ",";
      s += std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
    }
  }
  return s + "}";
}

constexpr const char* kMonotoneStatement =
    "gamma(G) <= gamma(G_e) <= gamma(G)+1 for every edge e, and gamma(G_F) <= gamma(G_F') "
    "for F subset of F'";

TheoremReport run_monotone(const VerifyConfig& cfg) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem_id = "PROP-MONOTONE";
  report.statement = kMonotoneStatement;
  const std::size_t hi = std::min<std::size_t>(ceiling(cfg, 8), 8);
  Corpus corpus = tree_corpus(3, hi);
  for (Corpus extra : {paths_cycles_corpus(), bipartite_corpus(), g_k_corpus(2), spider_corpus(4)}) {
    for (auto& item : extra.items) corpus.items.push_back(std::move(item));
  }
  report.corpus_description = corpus.description +
                              ", plus path/cycle, K_{s,t}, G_1, G_2, wounded-spider fixtures; " +
                              std::to_string(cfg.monotone_pairs) + " random (F, F') pairs, seed " +
                              std::to_string(cfg.seed);

  auto gamma_of = [](const Graph& g, std::uint64_t mask) {
    return domination_number(subdivide_edges(g, EdgeSet::from_mask(g, mask))).gamma;
  };

  std::size_t single_edge_checks = 0;
  std::vector<std::size_t> base_gamma;
  for (const auto& item : corpus.items) {
    const Graph& g = item.graph;
    const std::size_t gamma = domination_number(g).gamma;
    base_gamma.push_back(gamma);
    for (std::size_t e = 0; e < g.size(); ++e) {
      const std::size_t ge = gamma_of(g, std::uint64_t{1} << e);
      ++single_edge_checks;
      if (ge < gamma || ge > gamma + 1) {
        report.counterexamples.push_back(
            {encode_graph6(g), "gamma(G_e) in [" + std::to_string(gamma) + "," +
                                   std::to_string(gamma + 1) + "] for e=" + describe_edges(g, std::uint64_t{1} << e),
             "gamma(G_e)=" + std::to_string(ge)});
      }
    }
  }

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.monotone_pairs; ++i) {
    const auto& g = corpus.items[i % corpus.items.size()].graph;
    const std::uint64_t all = low_bits(g.size());
    const std::uint64_t larger = rng() & all;
    const std::uint64_t smaller = larger & rng();
    const std::size_t gs = gamma_of(g, smaller);
    const std::size_t gl = gamma_of(g, larger);
    const std::size_t gap = static_cast<std::size_t>(std::popcount(larger & ~smaller));
    const std::size_t g0 = base_gamma[i % corpus.items.size()];
    if (gs < g0 || gs > gl || gl > gs + gap) {
      report.counterexamples.push_back(
          {encode_graph6(g),
           "gamma(G) <= gamma(G_F) <= gamma(G_F') <= gamma(G_F)+|F'-F| with F=" +
               describe_edges(g, smaller) + " F'=" + describe_edges(g, larger),
           "gamma(G)=" + std::to_string(g0) + " gamma(G_F)=" + std::to_string(gs) +
               " gamma(G_F')=" + std::to_string(gl)});
    }
  }
  report.instances_checked = single_edge_checks + cfg.monotone_pairs;
  report.notes.push_back(std::to_string(single_edge_checks) + " single-edge checks over " +
                         std::to_string(corpus.items.size()) + " graphs");
  report.notes.push_back(std::to_string(cfg.monotone_pairs) + " random nested pairs");
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

// ----------------------------------------------------------------- registry

struct Entry {
  std::string id;
  std::string statement;
  std::function<Corpus(const VerifyConfig&)> corpus;
  std::vector<NamedPredicate> predicates;
  std::function<TheoremReport(const VerifyConfig&)> custom;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto trees_to = [](std::size_t hi) {
      return [hi](const VerifyConfig& cfg) { return tree_corpus(3, ceiling(cfg, hi)); };
    };
    e.push_back({"OBS-PATHS", "sd(P_n) = sd(C_n) = q = 1, 2, 3 for n = 0, 2, 1 mod 3",
                 [](const VerifyConfig&) { return paths_cycles_corpus(); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"OBS-UNIVERSAL", "a graph with a universal vertex has q = 1",
                 [](const VerifyConfig&) { return universal_corpus(); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"OBS-KST", "q(K_{2,t}) = t+1 and q(K_{s,t}) = 2 for 3 <= s <= t",
                 [](const VerifyConfig&) { return bipartite_corpus(); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"PROP-SPIDER", "the wounded spider S_{t,t-d} has gamma = t-d+1 and q = n-d",
                 [](const VerifyConfig&) { return spider_corpus(5); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"PROP-GK", "G_k has gamma = k+1 and q = n-k",
                 [](const VerifyConfig&) { return g_k_corpus(3); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"PROP-AK", "A_k has gamma = 3 and q = n+k",
                 [](const VerifyConfig&) { return a_k_corpus(1); },
                 {{"prediction", prediction_predicate},
                  {"unique-V1", unique_v1_predicate, true}},
                 {}});
    e.push_back({"PROP-CORONA", "G corona K_1 has gamma = n(G) and q = m(G)+1+alpha(G)",
                 [](const VerifyConfig&) { return corona_corpus(); },
                 {{"prediction", prediction_predicate}}, {}});
    e.push_back({"COR-BOUNDS", "every tree T of order >= 3 has 1 <= q(T) <= n(T)-1", trees_to(10),
                 {{"bounds", bounds_predicate}}, {}});
    e.push_back({"THM-EXTREMAL", "for a tree, q = n-1 iff T = K_{1,r} corona K_1", trees_to(9),
                 {{"extremal", extremal_predicate}}, {}});
    e.push_back({"THM-RAD-1CRIT", "q = 1 iff every gamma-set is a 2-packing", trees_to(10),
                 {{"rad", rad_predicate}}, {}});
    e.push_back({"THM-2CRIT-CHAR",
                 "a tree has q = 2 iff some gamma-set has exactly one pair at distance 1 or 2 and "
                 "every gamma-set has at most one close pair with both ends having >= 2 outside "
                 "neighbours",
                 trees_to(10),
                 {{"literal", two_critical_predicate},
                  {"alternative", two_critical_alternative_predicate, true}},
                 {}});
    e.push_back({"THM-SD-RANGE", "every tree of order >= 3 has sd in {1,2,3}", trees_to(10),
                 {{"range", sd_range_predicate}}, {}});
    e.push_back({"THM-SD1", "sd(T) = 1 iff some leaf lies in N(T) or some edge has both ends in N(T)",
                 trees_to(10), {{"sd1", sd1_predicate}}, {}});
    e.push_back({"THM-SD3-FAMILY", "sd(T) = 3 iff T belongs to the family F", trees_to(10),
                 {{"family", sd3_family_predicate}}, {}});
    e.push_back({"THM-SD2-P3K2", "q = 2 and sd = 2 exactly for the paths P_{3k+2}", trees_to(11),
                 {{"p3k2", sd2_path_predicate}}, {}});
    e.push_back({"THM-SD3-P3K1", "q = 3 and sd = 3 exactly for the paths P_{3k+1}", trees_to(11),
                 {{"p3k1", sd3_path_predicate}}, {}});
    e.push_back({"COR-NBOUND",
                 "for every gamma-set D and v outside D, |N(v) cap D| <= q",
                 [](const VerifyConfig& cfg) { return neighbour_bound_corpus(ceiling(cfg, 10)); },
                 {{"nbound", neighbour_bound_predicate}}, {}});
    e.push_back({"PROP-MONOTONE", kMonotoneStatement, {}, {}, run_monotone});
    return e;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw Error(Errc::UnknownTheorem, "no theorem with id '" + id + "'");
}

TheoremReport run_checker(const std::string& id, const std::string& statement,
                          std::span<const Graph> corpus, const std::vector<NamedPredicate>& preds,
                          const VerifyConfig& cfg) {
  Corpus c;
  c.description = "caller-supplied corpus of " + std::to_string(corpus.size()) + " graphs";
  for (const auto& g : corpus) c.items.push_back({g, {}, std::nullopt});
  AnalysisCache cache;
  return evaluate(id, statement, c, preds, cfg, cache);
}

}  // namespace

std::vector<TheoremInfo> theorem_registry() {
  std::vector<TheoremInfo> out;
  for (const auto& e : registry()) {
    out.push_back({e.id, e.statement});
  }
  return out;
}

TheoremReport run_theorem(const std::string& id, const VerifyConfig& cfg, AnalysisCache& cache) {
  const Entry& e = find_entry(id);
  if (e.custom) return e.custom(cfg);
  return evaluate(e.id, e.statement, e.corpus(cfg), e.predicates, cfg, cache);
}

std::vector<TheoremReport> run_theorems(const std::vector<std::string>& ids,
                                        const VerifyConfig& cfg) {
  for (const auto& id : ids) find_entry(id);
  AnalysisCache cache;
  std::vector<TheoremReport> out;
  for (const auto& id : ids) out.push_back(run_theorem(id, cfg, cache));
  return out;
}

std::optional<Counterexample> replay_counterexample(const std::string& id,
                                                    const std::string& graph6,
                                                    const VerifyConfig& cfg) {
  const Entry& e = find_entry(id);
  if (e.custom) throw Error(Errc::UnknownTheorem, id + " has no per-instance predicate");
  const Graph g = decode_graph6(graph6);

  Corpus corpus{"replay of " + graph6, {}};
  for (auto& item : e.corpus(cfg).items) {
    if (encode_graph6(item.graph) == encode_graph6(g)) {
      corpus.items.push_back(std::move(item));
      break;
    }
  }
  if (corpus.items.empty()) corpus.items.push_back({g, {}, std::nullopt});
  AnalysisCache cache;
  const TheoremReport r = evaluate(e.id, e.statement, corpus, e.predicates, cfg, cache);
  if (r.counterexamples.empty()) return std::nullopt;
  return r.counterexamples.front();
}

TheoremReport check_rad_1critical(std::span<const Graph> corpus, const VerifyConfig& cfg) {
  return run_checker("THM-RAD-1CRIT", find_entry("THM-RAD-1CRIT").statement, corpus,
                     {{"rad", rad_predicate}}, cfg);
}

TheoremReport check_2critical_characterization(std::span<const Graph> corpus,
                                               const VerifyConfig& cfg) {
  return run_checker("THM-2CRIT-CHAR", find_entry("THM-2CRIT-CHAR").statement, corpus,
                     {{"literal", two_critical_predicate},
                      {"alternative", two_critical_alternative_predicate, true}},
                     cfg);
}

TheoremReport check_tree_bounds_and_extremal(std::span<const Graph> corpus,
                                             const VerifyConfig& cfg) {
  return run_checker("COR-BOUNDS+THM-EXTREMAL", "tree bounds on q and the extremal case", corpus,
                     {{"bounds", bounds_predicate}, {"extremal", extremal_predicate}}, cfg);
}

TheoremReport check_sd_characterizations(std::span<const Graph> corpus, const VerifyConfig& cfg) {
  return run_checker("THM-SD-RANGE+THM-SD1+THM-SD3-FAMILY",
                     "sd range and the sd = 1 and sd = 3 characterizations for trees", corpus,
                     {{"range", sd_range_predicate},
                      {"sd1", sd1_predicate},
                      {"family", sd3_family_predicate}},
                     cfg);
}

TheoremReport check_unique_intersections(std::span<const Graph> corpus, const VerifyConfig& cfg) {
  return run_checker("THM-SD2-P3K2+THM-SD3-P3K1", "trees with q = sd = 2 or q = sd = 3 are paths",
                     corpus, {{"p3k2", sd2_path_predicate}, {"p3k1", sd3_path_predicate}}, cfg);
}

TheoremReport check_family_predictions(const FamilyBudget& limits, const VerifyConfig& cfg) {
  Corpus c{"paths/cycles, universal-vertex graphs, K_{s,t}, wounded spiders t<=" +
               std::to_string(limits.spider_max_t) + ", G_k k<=" + std::to_string(limits.g_k_max) +
               ", A_k k<=" + std::to_string(limits.a_k_max) + ", coronas",
           {}};
  for (Corpus part : {paths_cycles_corpus(), universal_corpus(), bipartite_corpus(),
                      spider_corpus(limits.spider_max_t), g_k_corpus(limits.g_k_max),
                      a_k_corpus(limits.a_k_max), corona_corpus()}) {
    for (auto& item : part.items) c.items.push_back(std::move(item));
  }
  AnalysisCache cache;
  return evaluate("FAMILY-PREDICTIONS", "computed (gamma, sd, q) equal the closed-form predictions",
                  c, {{"prediction", prediction_predicate}}, cfg, cache);
}

}  // namespace gammacrit
