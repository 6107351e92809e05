#include "gammacrit/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gammacrit/error.hpp"

namespace gammacrit {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u == raw.v) {
      throw Error(Errc::SelfLoop, "vertex " + std::to_string(raw.u));
    }
    if (raw.u >= n || raw.v >= n) {
      throw Error(Errc::IndexOutOfRange,
                  edge_str(raw) + " with n=" + std::to_string(n));
    }
    g.edges_.push_back(Edge::normalized(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(Errc::DuplicateEdge, edge_str(*dup));
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back(Edge{a, b});
  *this = from_edges(n, es);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw Error(Errc::IndexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" + std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= order() || b >= order() || a == b) return std::nullopt;
  const Edge e = Edge::normalized(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeSet::EdgeSet(const Graph& host, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    e = Edge::normalized(e.u, e.v);
    if (!host.edge_index(e.u, e.v)) {
      throw Error(Errc::EdgeNotInGraph, edge_str(e));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw Error(Errc::DuplicateEdge, edge_str(*dup));
  edges_ = std::move(edges);
}

EdgeSet EdgeSet::from_mask(const Graph& host, std::uint64_t mask) {
  if (host.size() < 64 && (mask >> host.size()) != 0) {
    throw Error(Errc::EdgeNotInGraph, "mask selects edge index >= m");
  }
  EdgeSet out;
  for (std::size_t i = 0; i < host.size() && i < 64; ++i) {
    if (mask >> i & 1U) out.edges_.push_back(host.edges()[i]);
  }
  return out;
}

std::uint64_t EdgeSet::mask(const Graph& host) const {
  std::uint64_t m = 0;
  for (const Edge& e : edges_) {
    auto idx = host.edge_index(e.u, e.v);
    if (!idx) throw Error(Errc::EdgeNotInGraph, edge_str(e));
    if (*idx >= 64) throw Error(Errc::TooLarge, "edge index beyond 64-bit mask");
    m |= std::uint64_t{1} << *idx;
  }
  return m;
}

Graph subdivide_edges(const Graph& g, const EdgeSet& f) {
  const std::size_t n = g.order();
  std::vector<Edge> out;
  out.reserve(g.size() + f.size());
  auto sub = f.edges().begin();
  Vertex next = static_cast<Vertex>(n);
  // Both g.edges() and f.edges() are sorted, so a merge walk assigns
  // subdivision vertices in sorted-edge order.
  for (const Edge& e : g.edges()) {
    if (sub != f.edges().end() && *sub == e) {
      out.push_back(Edge{e.u, next});
      out.push_back(Edge{e.v, next});
      ++next;
      ++sub;
    } else {
      out.push_back(e);
    }
  }
  if (sub != f.edges().end()) throw Error(Errc::EdgeNotInGraph, edge_str(*sub));
  return Graph::from_edges(n + f.size(), out);
}

Graph subdivide_edges(const Graph& g, std::span<const Edge> f) {
  return subdivide_edges(g, EdgeSet(g, std::vector<Edge>(f.begin(), f.end())));
}

namespace {

std::vector<std::size_t> bfs(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw Error(Errc::IndexOutOfRange, "distance endpoint out of range");
  }
  const std::size_t d = bfs(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::vector<std::vector<std::size_t>> distance_matrix(const Graph& g) {
  std::vector<std::vector<std::size_t>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(bfs(g, v));
  return rows;
}

VertexClasses classify_vertices(const Graph& g) {
  VertexClasses c;
  std::vector<std::size_t> leaf_neighbours(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      c.leaves.push_back(v);
      ++leaf_neighbours[g.neighbours(v)[0]];
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (leaf_neighbours[v] > 0) {
      c.supports.push_back(v);
      (leaf_neighbours[v] == 1 ? c.weak_supports : c.strong_supports).push_back(v);
    } else if (g.degree(v) != 1) {
      c.other.push_back(v);
    }
  }
  return c;
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexList comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex y : g.neighbours(comp[i])) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace gammacrit
