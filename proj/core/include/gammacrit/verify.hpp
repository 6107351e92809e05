#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammacrit/criticality.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/graph.hpp"

namespace gammacrit {

struct Counterexample {
  std::string graph6;
  std::string expected;
  std::string actual;
};

struct SkippedInstance {
  std::string graph6;
  std::string reason;
};

enum class Verdict { Pass, Fail, Incomplete };

std::string_view to_string(Verdict v) noexcept;

struct TheoremReport {
  std::string theorem_id;
  std::string statement;
  std::string corpus_description;
  std::size_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  /// Instances the solver could not finish (budget, truncation). A report
  /// with skips is Incomplete, never Pass.
  std::vector<SkippedInstance> skipped;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  Verdict verdict() const noexcept {
    if (!counterexamples.empty()) return Verdict::Fail;
    if (!skipped.empty()) return Verdict::Incomplete;
    return Verdict::Pass;
  }
};

struct VerifyConfig {
  /// Overrides every tree-corpus ceiling when set.
  std::optional<std::size_t> max_n;
  std::uint64_t budget = kDefaultSolverBudget;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::size_t monotone_pairs = 10'000;
};

/// Everything the tree and fixture predicates need about one graph.
struct InstanceAnalysis {
  Graph graph;
  std::string graph6;
  std::string label;
  /// Set for trees.
  std::optional<std::string> tree_code;
  std::optional<CriticalityReport> criticality;
  GammaResult gamma_sets;
  VertexList never;
  std::optional<std::string> failure;
};

InstanceAnalysis analyze_instance(const Graph& g, const VerifyConfig& cfg, std::string label = {});

/// Thread-safe memo of analyses keyed by graph6, shared by all sweeps of a run.
class AnalysisCache {
 public:
  AnalysisCache();
  ~AnalysisCache();
  AnalysisCache(const AnalysisCache&) = delete;
  AnalysisCache& operator=(const AnalysisCache&) = delete;

  /// Results are in corpus order regardless of worker count.
  std::vector<std::shared_ptr<const InstanceAnalysis>> analyze(std::span<const Graph> corpus,
                                                               std::span<const std::string> labels,
                                                               const VerifyConfig& cfg);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// Every registered theorem id, in registry order.
std::vector<TheoremInfo> theorem_registry();

/// Throws Error{UnknownTheorem}.
TheoremReport run_theorem(const std::string& id, const VerifyConfig& cfg, AnalysisCache& cache);
std::vector<TheoremReport> run_theorems(const std::vector<std::string>& ids,
                                        const VerifyConfig& cfg);

/// Re-runs a theorem's per-instance predicate on one decoded graph.
/// Returns the discrepancy, or nullopt if the instance is consistent.
/// Throws Error{UnknownTheorem} for ids without a per-instance predicate.
std::optional<Counterexample> replay_counterexample(const std::string& id,
                                                    const std::string& graph6,
                                                    const VerifyConfig& cfg = {});

// Direct checkers over caller-supplied corpora.

TheoremReport check_rad_1critical(std::span<const Graph> corpus, const VerifyConfig& cfg = {});
TheoremReport check_2critical_characterization(std::span<const Graph> corpus,
                                               const VerifyConfig& cfg = {});
TheoremReport check_tree_bounds_and_extremal(std::span<const Graph> corpus,
                                             const VerifyConfig& cfg = {});
TheoremReport check_sd_characterizations(std::span<const Graph> corpus,
                                         const VerifyConfig& cfg = {});
TheoremReport check_unique_intersections(std::span<const Graph> corpus,
                                         const VerifyConfig& cfg = {});

struct FamilyBudget {
  std::size_t spider_max_t = 5;
  std::size_t g_k_max = 3;
  std::size_t a_k_max = 1;
};
TheoremReport check_family_predictions(const FamilyBudget& limits = {},
                                       const VerifyConfig& cfg = {});

/// The predicate of the 2-critical characterization, evaluated over the
/// complete list of gamma-sets of a tree.
struct TwoCriticalPredicate {
  /// Some gamma-set has exactly one unordered pair at distance 1 or 2.
  bool exists_single_close_pair = false;
  /// Every gamma-set has at most one pair at distance <= 2 whose endpoints
  /// both have >= 2 neighbours outside the set.
  bool all_bounded_heavy_pairs = false;
  /// Alternative reading: every gamma-set has at most one pair at distance
  /// <= 2, and any such pair has both endpoints with >= 2 outside neighbours.
  bool all_single_heavy_pair = false;

  bool literal() const { return exists_single_close_pair && all_bounded_heavy_pairs; }
  bool alternative() const { return exists_single_close_pair && all_single_heavy_pair; }
};
TwoCriticalPredicate evaluate_two_critical_predicate(const Graph& t,
                                                     std::span<const VertexList> gamma_sets);

// Serialisation. JSON objects have sorted keys.

std::string to_json(const TheoremReport& r, bool include_timing = true);
std::string to_json(const std::vector<TheoremReport>& reports, bool include_timing = true);
std::string summary_table(const std::vector<TheoremReport>& reports);

}  // namespace gammacrit
