#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include "gammacrit/graph.hpp"

namespace gammacrit {

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
/// Supports the 1-byte and 4-byte order prefixes, i.e. n <= 258047.
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and one trailing newline.
/// Throws Error{MalformedGraph6}.
Graph decode_graph6(std::string_view text);

struct DotOptions {
  std::string name = "G";
  /// Vertices with index >= this are drawn as subdivision vertices.
  std::size_t first_subdivision_vertex = std::numeric_limits<std::size_t>::max();
};

std::string to_dot(const Graph& g, const DotOptions& opts = {});

/// Edge-list text: first token n, then whitespace-separated `u v` pairs.
/// Throws Error{MalformedInput} plus any Graph construction error.
Graph parse_edge_list(std::istream& in);

}  // namespace gammacrit
