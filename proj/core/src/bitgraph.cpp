#include "gammacrit/bitgraph.hpp"

#include <string>

#include "gammacrit/error.hpp"

namespace gammacrit {

BitGraph::BitGraph(const Graph& g) {
  if (g.order() > kMaxBitGraphOrder) {
    throw Error(Errc::TooLarge, "exact solvers support at most 64 vertices, got " +
                                    std::to_string(g.order()));
  }
  closed_.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) closed_[v] = bit(v);
  for (const Edge& e : g.edges()) {
    closed_[e.u] |= bit(e.v);
    closed_[e.v] |= bit(e.u);
  }
}

BitGraph BitGraph::subdivided(const Graph& g, std::uint64_t edge_mask) {
  const std::size_t extra = static_cast<std::size_t>(std::popcount(edge_mask));
  const std::size_t n = g.order() + extra;
  if (n > kMaxBitGraphOrder) {
    throw Error(Errc::TooLarge, "subdivided graph exceeds 64 vertices");
  }
  if (g.size() < 64 && (edge_mask >> g.size()) != 0) {
    throw Error(Errc::EdgeNotInGraph, "mask selects edge index >= m");
  }
  BitGraph out;
  out.closed_.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.closed_[v] = bit(v);
  std::size_t next = g.order();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    if (edge_mask >> i & 1U) {
      out.closed_[e.u] |= bit(next);
      out.closed_[e.v] |= bit(next);
      out.closed_[next] |= bit(e.u) | bit(e.v);
      ++next;
    } else {
      out.closed_[e.u] |= bit(e.v);
      out.closed_[e.v] |= bit(e.u);
    }
  }
  return out;
}

VertexMask to_mask(std::span<const Vertex> vs, std::size_t n) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v >= n || v >= kMaxBitGraphOrder) {
      throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
    }
    m |= bit(v);
  }
  return m;
}

}  // namespace gammacrit
