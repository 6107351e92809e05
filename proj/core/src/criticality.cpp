#include "gammacrit/criticality.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/error.hpp"

namespace gammacrit {

namespace {

using EdgeMask = std::uint64_t;

constexpr std::size_t kMaxLevelwiseEdges = 24;

/// Answers "does subdividing this edge subset keep gamma?" with a cache and a
/// hard ceiling on solver calls.
class SafetyOracle {
 public:
  SafetyOracle(const Graph& g, std::size_t gamma, std::uint64_t budget, SearchStats& stats)
      : g_(g), gamma_(gamma), budget_(budget), stats_(stats) {}

  bool safe(EdgeMask f) {
    if (auto hit = cache_.find(f); hit != cache_.end()) {
      ++stats_.cache_hits;
      return hit->second;
    }
    const bool s = evaluate(f);
    cache_.emplace(f, s);
    return s;
  }

  /// Uncached evaluation for callers that keep their own table.
  bool evaluate(EdgeMask f) {
    if (stats_.gamma_evaluations >= budget_) {
      throw Error(Errc::Budget, "gamma-solver budget of " + std::to_string(budget_) +
                                    " evaluations exhausted");
    }
    ++stats_.gamma_evaluations;
    // gamma(G_F) >= gamma(G) always, so "safe" is a bounded decision.
    return has_dominating_set_within(BitGraph::subdivided(g_, f), gamma_);
  }

  /// True if some (|f|-1)-subset is already known to be unsafe.
  bool has_known_unsafe_facet(EdgeMask f) const {
    for (EdgeMask rest = f; rest; rest &= rest - 1) {
      auto it = cache_.find(f & ~(rest & -rest));
      if (it != cache_.end() && !it->second) return true;
    }
    return false;
  }

  void remember(EdgeMask f, bool s) { cache_.emplace(f, s); }

 private:
  const Graph& g_;
  std::size_t gamma_;
  std::uint64_t budget_;
  SearchStats& stats_;
  std::unordered_map<EdgeMask, bool> cache_;
};

/// Visits k-subsets of {0..m-1} as bitmasks in lexicographic order of their
/// sorted index sequences. Stops when the visitor returns false.
template <typename Visitor>
void for_each_combination(std::size_t m, std::size_t k, Visitor&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    EdgeMask mask = 0;
    for (std::size_t i : idx) mask |= EdgeMask{1} << i;
    if (!visit(mask)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void validate_input(const Graph& g) {
  if (g.order() < 3) {
    throw Error(Errc::OrderTooSmall, "criticality needs order >= 3, got " +
                                         std::to_string(g.order()));
  }
  if (!is_connected(g)) throw Error(Errc::Disconnected, "criticality needs a connected graph");
  if (g.order() + g.size() > kMaxBitGraphOrder) {
    throw Error(Errc::TooLarge, "n + m must not exceed 64");
  }
}

std::size_t gamma_of(const Graph& g) { return *min_dominating_size(BitGraph(g)); }

/// Smallest increasing subset, sizes 1, 2, ... in lexicographic order.
SubdivisionNumber smallest_increasing(const Graph& g, SafetyOracle& oracle,
                                      SearchStats& stats) {
  const std::size_t m = g.size();
  const bool tree = is_tree(g);
  SubdivisionNumber out;
  for (std::size_t k = 1; k <= m; ++k) {
    if (tree && k > 3) {
      throw Error(Errc::Internal, "tree with subdivision number above 3");
    }
    for_each_combination(m, k, [&](EdgeMask f) {
      ++stats.subsets_examined;
      if (oracle.has_known_unsafe_facet(f)) return true;
      if (!oracle.safe(f)) {
        out.sd = k;
        out.witness = EdgeSet::from_mask(g, f);
        return false;
      }
      return true;
    });
    if (out.sd) return out;
  }
  return out;
}

void run_levelwise(const Graph& g, SafetyOracle& oracle, CriticalityReport& r) {
  const std::size_t m = g.size();
  std::vector<std::uint8_t> safe(std::size_t{1} << m, 0);
  safe[0] = 1;
  EdgeMask last_safe = 0;

  for (std::size_t k = 1; k <= m; ++k) {
    bool level_has_safe = false;
    for_each_combination(m, k, [&](EdgeMask f) {
      ++r.stats.subsets_examined;
      // Downward closure: a set with an unsafe facet is unsafe.
      for (EdgeMask rest = f; rest; rest &= rest - 1) {
        if (!safe[f & ~(rest & -rest)]) return true;
      }
      if (oracle.evaluate(f)) {
        safe[f] = 1;
        if (!level_has_safe) last_safe = f;
        level_has_safe = true;
      } else if (!r.sd) {
        r.sd = k;
        r.sd_witness = EdgeSet::from_mask(g, f);
      }
      return true;
    });
    if (!level_has_safe) {
      r.q = k;
      break;
    }
  }
  r.q_witness_safe = EdgeSet::from_mask(g, last_safe);
}

class MaxSafeSetSearch {
 public:
  MaxSafeSetSearch(const Graph& g, SafetyOracle& oracle, SearchStats& stats)
      : m_(g.size()), oracle_(oracle), stats_(stats) {}

  EdgeMask run() {
    // Greedy maximal safe set seeds the bound.
    EdgeMask seed = 0;
    for (std::size_t e = 0; e < m_; ++e) {
      const EdgeMask f = seed | (EdgeMask{1} << e);
      ++stats_.subsets_examined;
      if (oracle_.safe(f)) seed = f;
    }
    best_ = seed;
    best_size_ = static_cast<std::size_t>(std::popcount(seed));
    if (best_size_ < m_) dfs(0, 0, 0);
    return best_;
  }

 private:
  void dfs(EdgeMask f, std::size_t next, std::size_t size) {
    if (size > best_size_) {
      best_ = f;
      best_size_ = size;
    }
    for (std::size_t e = next; e < m_; ++e) {
      if (size + (m_ - e) <= best_size_) return;
      const EdgeMask grown = f | (EdgeMask{1} << e);
      ++stats_.subsets_examined;
      if (oracle_.has_known_unsafe_facet(grown)) {
        oracle_.remember(grown, false);
        continue;
      }
      if (oracle_.safe(grown)) dfs(grown, e + 1, size + 1);
    }
  }

  std::size_t m_;
  SafetyOracle& oracle_;
  SearchStats& stats_;
  EdgeMask best_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

std::string_view to_string(SearchStrategy s) noexcept {
  switch (s) {
    case SearchStrategy::Auto: return "auto";
    case SearchStrategy::LevelwiseBitmask: return "levelwise-bitmask";
    case SearchStrategy::SafeSetDfs: return "safe-set-dfs";
  }
  return "unknown";
}

std::size_t gamma_after_subdivision(const Graph& g, const EdgeSet& f) {
  return domination_number(subdivide_edges(g, f)).gamma;
}

SubdivisionNumber subdivision_number(const Graph& g, const CriticalityOptions& opts) {
  validate_input(g);
  SearchStats stats;
  SafetyOracle oracle(g, gamma_of(g), opts.budget, stats);
  return smallest_increasing(g, oracle, stats);
}

CriticalityReport criticality_index(const Graph& g, const CriticalityOptions& opts) {
  validate_input(g);
  CriticalityReport r;
  r.gamma = gamma_of(g);

  SearchStrategy strategy = opts.strategy;
  if (strategy == SearchStrategy::Auto) {
    strategy = g.size() <= opts.bitmask_edge_threshold ? SearchStrategy::LevelwiseBitmask
                                                       : SearchStrategy::SafeSetDfs;
  }
  if (strategy == SearchStrategy::LevelwiseBitmask && g.size() > kMaxLevelwiseEdges) {
    throw Error(Errc::TooLarge, "levelwise bitmask search supports m <= 24");
  }
  r.stats.strategy = strategy;

  SafetyOracle oracle(g, r.gamma, opts.budget, r.stats);
  if (strategy == SearchStrategy::LevelwiseBitmask) {
    run_levelwise(g, oracle, r);
  } else {
    MaxSafeSetSearch search(g, oracle, r.stats);
    const EdgeMask best = search.run();
    const auto size = static_cast<std::size_t>(std::popcount(best));
    if (size < g.size()) r.q = size + 1;
    r.q_witness_safe = EdgeSet::from_mask(g, best);
    auto sd = smallest_increasing(g, oracle, r.stats);
    r.sd = sd.sd;
    r.sd_witness = std::move(sd.witness);
  }
  if (is_tree(g) && (!r.sd || *r.sd > 3)) {
    throw Error(Errc::Internal, "tree with subdivision number outside 1..3");
  }
  return r;
}

bool check_neighbour_bound(const Graph& g, const CriticalityReport& report) {
  if (!report.q) throw Error(Errc::BadParams, "q undefined for this graph");
  const GammaResult sets = all_gamma_sets(g);
  if (sets.enumeration_truncated) {
    throw Error(Errc::EnumerationTruncated, "gamma-set enumeration hit its cap");
  }
  const BitGraph bg(g);
  for (const VertexList& d : sets.gamma_sets) {
    const VertexMask dm = to_mask(d, g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dm & bit(v)) continue;
      if (static_cast<std::size_t>(std::popcount(bg.open(v) & dm)) > *report.q) return false;
    }
  }
  return true;
}

std::uint64_t budget_from_environment() {
  const char* env = std::getenv("GAMMA_CRIT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultSolverBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(Errc::BadParams, "GAMMA_CRIT_BUDGET must be a positive integer");
  }
  return v;
}

}  // namespace gammacrit
