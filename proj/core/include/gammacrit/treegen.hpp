#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gammacrit/graph.hpp"

namespace gammacrit {

/// Isomorphism-invariant encoding of a (optionally vertex-coloured) tree:
/// the AHU bracket string of the tree rooted at its center, or the smaller
/// of the two rootings at a bicenter.
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Throws Error{NotATree}. Colours, when given, must have one entry per
/// vertex and become part of the code.
CanonicalCode canonical_code(const Graph& t, std::span<const std::uint8_t> colours = {});

/// One or two central vertices.
VertexList tree_centers(const Graph& t);

/// The tree a code describes, vertices numbered in code (preorder) order.
Graph tree_from_code(const CanonicalCode& code, std::vector<std::uint8_t>* colours = nullptr);

inline constexpr std::size_t kDefaultTreeCeiling = 16;

struct TreeEnumOptions {
  std::size_t ceiling = kDefaultTreeCeiling;
  /// Orders up to this use the Prüfer method, larger ones the level-sequence
  /// generator.
  std::size_t prufer_max_n = 7;
};

/// One tree per isomorphism class, canonically labelled, sorted by code.
/// Throws Error{BadParams} unless 1 <= n <= ceiling.
std::vector<Graph> enumerate_trees(std::size_t n, const TreeEnumOptions& opts = {});
/// All trees of every order lo..hi, concatenated by order.
std::vector<Graph> enumerate_trees(std::size_t lo, std::size_t hi,
                                   const TreeEnumOptions& opts = {});

/// Labelled trees from every Prüfer sequence, deduplicated by code.
std::vector<Graph> enumerate_trees_prufer(std::size_t n);
/// Wright-Richmond-Odlyzko-McKay successor generation of level sequences.
std::vector<Graph> enumerate_trees_level_sequence(std::size_t n);

/// Decodes a Prüfer sequence of length n-2 over 0..n-1.
Graph tree_from_prufer(std::span<const Vertex> sequence);
/// Calls `visit` on each of the n^(n-2) labelled trees on n >= 2 vertices.
void for_each_labelled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace gammacrit
