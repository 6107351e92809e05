#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gammacrit/graph.hpp"

namespace gammacrit {

inline constexpr std::uint64_t kDefaultSolverBudget = 5'000'000;

enum class SearchStrategy {
  Auto,
  /// All subsets, level by level, with a 2^m safe-set bitmap (m <= 24).
  LevelwiseBitmask,
  /// Branch-and-bound over safe sets with a memoised subset -> verdict cache.
  SafeSetDfs,
};

std::string_view to_string(SearchStrategy s) noexcept;

struct CriticalityOptions {
  /// Ceiling on gamma-solver invocations; exceeding it throws Error{Budget}.
  std::uint64_t budget = kDefaultSolverBudget;
  SearchStrategy strategy = SearchStrategy::Auto;
  /// Auto picks LevelwiseBitmask for m <= this, SafeSetDfs above.
  std::size_t bitmask_edge_threshold = 16;
};

struct SearchStats {
  SearchStrategy strategy = SearchStrategy::Auto;
  std::uint64_t gamma_evaluations = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t subsets_examined = 0;
};

struct SubdivisionNumber {
  /// nullopt when no edge subset increases gamma.
  std::optional<std::size_t> sd;
  EdgeSet witness;
};

struct CriticalityReport {
  std::size_t gamma = 0;
  std::optional<std::size_t> sd;
  EdgeSet sd_witness;
  /// nullopt: subdividing every edge leaves gamma unchanged, so the graph is
  /// not q-critical for any q <= m.
  std::optional<std::size_t> q;
  /// A maximum-cardinality edge set whose subdivision keeps gamma.
  EdgeSet q_witness_safe;
  SearchStats stats;
};

/// gamma(G_F). Throws Error{EdgeNotInGraph}.
std::size_t gamma_after_subdivision(const Graph& g, const EdgeSet& f);

/// Throws Error{OrderTooSmall | Disconnected | Budget}.
SubdivisionNumber subdivision_number(const Graph& g, const CriticalityOptions& opts = {});

/// Throws Error{OrderTooSmall | Disconnected | Budget | TooLarge}.
CriticalityReport criticality_index(const Graph& g, const CriticalityOptions& opts = {});

/// |N(v) ∩ D| <= q for every gamma-set D and v outside D.
/// Throws Error{EnumerationTruncated}, Error{BadParams} when q is undefined.
bool check_neighbour_bound(const Graph& g, const CriticalityReport& report);

/// Budget default, overridden by the GAMMA_CRIT_BUDGET environment variable.
std::uint64_t budget_from_environment();

}  // namespace gammacrit
