#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gammacrit {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge normalized(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; edge i of edges() is the edge
/// with index i wherever an edge bitmask is used (criticality search).
class Graph {
 public:
  Graph() = default;

  /// Throws Error{SelfLoop | DuplicateEdge | IndexOutOfRange}.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<VertexList> adjacency_;
};

/// Subset of a host graph's edges, sorted, no duplicates.
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Throws Error{EdgeNotInGraph | DuplicateEdge}.
  EdgeSet(const Graph& host, std::vector<Edge> edges);
  /// Bit i selects host.edges()[i].
  static EdgeSet from_mask(const Graph& host, std::uint64_t mask);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::uint64_t mask(const Graph& host) const;

  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Replaces each edge {u,v} of f by {u,w},{w,v}. Original vertices keep their
/// indices; subdivision vertices are numbered n, n+1, ... in sorted edge order.
Graph subdivide_edges(const Graph& g, const EdgeSet& f);
/// Same as above; validates f against g (Error{EdgeNotInGraph}).
Graph subdivide_edges(const Graph& g, std::span<const Edge> f);

/// BFS distance, std::nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
/// Row u holds BFS distances from u; unreachable entries are kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::vector<std::size_t>> distance_matrix(const Graph& g);

struct VertexClasses {
  VertexList leaves;
  VertexList supports;
  VertexList weak_supports;
  VertexList strong_supports;
  VertexList other;
};

VertexClasses classify_vertices(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<VertexList> connected_components(const Graph& g);

}  // namespace gammacrit
