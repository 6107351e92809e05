#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/graph.hpp"

namespace gammacrit {

inline constexpr std::size_t kDefaultGammaSetCap = 100'000;

struct GammaResult {
  std::size_t gamma = 0;
  /// One minimum dominating set (lexicographically first under the constraints).
  VertexList witness;
  /// Filled by all_gamma_sets only, in lexicographic order.
  std::vector<VertexList> gamma_sets;
  bool enumeration_truncated = false;
  /// Advisory: the input was disconnected; gamma is the sum over components.
  bool disconnected = false;
};

struct DominationConstraints {
  VertexList forced_in;
  VertexList forbidden;
};

/// Throws Error{IndexOutOfRange}.
bool is_dominating(const Graph& g, std::span<const Vertex> d);

/// Exact minimum dominating set containing forced_in and avoiding forbidden.
/// Branch-and-bound on the undominated vertex with fewest candidates.
/// Throws Error{Infeasible} if no such set exists, Error{BadParams} if the
/// constraint sets intersect, Error{TooLarge} for n > 64.
GammaResult domination_number(const Graph& g, const DominationConstraints& constraints = {});

/// Linear-time three-state DP. Throws Error{NotATree}.
std::size_t domination_number_tree(const Graph& t);

/// Every minimum dominating set in lexicographic order, at most `cap` of them.
GammaResult all_gamma_sets(const Graph& g, std::size_t cap = kDefaultGammaSetCap);

/// True iff all distinct pairs in `a` are at distance > 2.
bool is_2packing(const Graph& g, std::span<const Vertex> a);

/// Vertices contained in no minimum dominating set.
VertexList never_vertices(const Graph& g);

/// Exact independence number by in/out branching on a max-degree vertex.
std::size_t independence_number(const Graph& g);

// Mask-level entry points shared with the criticality search.

/// Minimum dominating set size containing `forced` and avoiding `forbidden`,
/// or nullopt when infeasible.
std::optional<std::size_t> min_dominating_size(const BitGraph& g, VertexMask forced = 0,
                                               VertexMask forbidden = 0,
                                               VertexMask* witness = nullptr);

/// True iff a dominating set of size <= k exists (containing `forced`).
bool has_dominating_set_within(const BitGraph& g, std::size_t k, VertexMask forced = 0);

/// Dominating sets of exactly size k in lexicographic order, containing
/// `forced` and avoiding `forbidden`. Stops after `cap` results and sets
/// `truncated` if more exist.
std::vector<VertexMask> dominating_sets_of_size(const BitGraph& g, std::size_t k,
                                                std::size_t cap, bool& truncated,
                                                VertexMask forced = 0,
                                                VertexMask forbidden = 0);

}  // namespace gammacrit
