#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gammacrit/graph.hpp"

namespace gammacrit {

using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxBitGraphOrder = 64;

inline constexpr VertexMask bit(std::size_t v) noexcept { return VertexMask{1} << v; }
inline constexpr VertexMask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~VertexMask{0} : bit(n) - 1;
}

/// Closed-neighbourhood bitmasks for graphs with at most 64 vertices.
/// The exponential solvers all run on this view.
class BitGraph {
 public:
  BitGraph() = default;
  /// Throws Error{TooLarge} when g.order() > 64.
  explicit BitGraph(const Graph& g);

  /// The view of subdivide_edges(g, EdgeSet::from_mask(g, edge_mask)) built
  /// without materialising the subdivided Graph. Vertex numbering matches.
  static BitGraph subdivided(const Graph& g, std::uint64_t edge_mask);

  std::size_t order() const noexcept { return closed_.size(); }
  VertexMask all() const noexcept { return low_bits(order()); }
  VertexMask closed(std::size_t v) const noexcept { return closed_[v]; }
  VertexMask open(std::size_t v) const noexcept { return closed_[v] & ~bit(v); }

  VertexMask closed_neighbourhood(VertexMask set) const noexcept {
    VertexMask out = 0;
    for (VertexMask s = set; s; s &= s - 1) out |= closed_[std::countr_zero(s)];
    return out;
  }

 private:
  std::vector<VertexMask> closed_;
};

inline VertexList to_vertex_list(VertexMask m) {
  VertexList out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

/// Throws Error{IndexOutOfRange} when a vertex is >= n.
VertexMask to_mask(std::span<const Vertex> vs, std::size_t n);

}  // namespace gammacrit
