#include "gammacrit/treegen.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "gammacrit/error.hpp"

namespace gammacrit {

namespace {

std::string rooted_code(const Graph& t, Vertex root, std::span<const std::uint8_t> colours) {
  const std::size_t n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbours(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (std::size_t i = order.size(); i-- > 0;) {
    const Vertex v = order[i];
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    if (!colours.empty()) code.push_back(static_cast<char>('0' + colours[v]));
    for (auto& k : kids) code += k;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (i == 0) {
      result = std::move(code);
    } else {
      child_codes[parent[v]].push_back(std::move(code));
    }
  }
  return result;
}

}  // namespace

VertexList tree_centers(const Graph& t) {
  if (!is_tree(t)) throw Error(Errc::NotATree, "tree_centers needs a tree");
  const std::size_t n = t.order();
  if (n <= 2) {
    VertexList all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  // Peel leaves layer by layer.
  std::vector<std::size_t> deg(n);
  VertexList layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    VertexList next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbours(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalCode canonical_code(const Graph& t, std::span<const std::uint8_t> colours) {
  if (!is_tree(t)) throw Error(Errc::NotATree, "canonical_code needs a tree");
  if (!colours.empty() && colours.size() != t.order()) {
    throw Error(Errc::BadParams, "one colour per vertex required");
  }
  const VertexList centers = tree_centers(t);
  std::string best = rooted_code(t, centers[0], colours);
  if (centers.size() == 2) best = std::min(best, rooted_code(t, centers[1], colours));
  return CanonicalCode{std::move(best)};
}

Graph tree_from_code(const CanonicalCode& code, std::vector<std::uint8_t>* colours) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  std::vector<std::uint8_t> cols;
  Vertex next = 0;
  const std::string& s = code.bytes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      if (!stack.empty()) edges.push_back(Edge{stack.back(), next});
      stack.push_back(next++);
      if (i + 1 < s.size() && s[i + 1] != '(' && s[i + 1] != ')') {
        cols.push_back(static_cast<std::uint8_t>(s[++i] - '0'));
      }
    } else if (s[i] == ')') {
      if (stack.empty()) throw Error(Errc::MalformedInput, "unbalanced canonical code");
      stack.pop_back();
    } else {
      throw Error(Errc::MalformedInput, "unexpected byte in canonical code");
    }
  }
  if (!stack.empty() || next == 0) throw Error(Errc::MalformedInput, "unbalanced canonical code");
  if (colours) *colours = std::move(cols);
  return Graph::from_edges(next, edges);
}

Graph tree_from_prufer(std::span<const Vertex> sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(Errc::IndexOutOfRange, "Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decode: `leaf` walks upward, `ptr` tracks the smallest leaf.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : sequence) {
    edges.push_back(Edge::normalized(static_cast<Vertex>(leaf), v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::normalized(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)));
  return Graph::from_edges(n, edges);
}

void for_each_labelled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n < 2) throw Error(Errc::BadParams, "labelled trees need n >= 2");
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    visit(tree_from_prufer(seq));
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 0;
    if (i == 0) return;
    ++seq[i - 1];
  }
}

namespace {

std::vector<Graph> canonical_sorted(std::vector<CanonicalCode> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(tree_from_code(c));
  return out;
}

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> from) {
  std::size_t p = 0;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

/// Returns the candidate if it is the canonical free-tree layout, else the
/// next layout to try.
Layout next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  Layout fresh = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(fresh);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) {
      fresh[fresh.size() - len + i] = static_cast<int>(i) + 1;
    }
  }
  return fresh;
}

Graph layout_to_tree(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.push_back(Edge{static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
    }
    stack.push_back(i);
  }
  return Graph::from_edges(layout.size(), edges);
}

}  // namespace

std::vector<Graph> enumerate_trees_prufer(std::size_t n) {
  if (n == 0) throw Error(Errc::BadParams, "n must be >= 1");
  if (n == 1) return {Graph::from_edges(1, {})};
  std::vector<CanonicalCode> codes;
  for_each_labelled_tree(n, [&](const Graph& t) { codes.push_back(canonical_code(t)); });
  return canonical_sorted(std::move(codes));
}

std::vector<Graph> enumerate_trees_level_sequence(std::size_t n) {
  if (n == 0) throw Error(Errc::BadParams, "n must be >= 1");
  if (n == 1) return {Graph::from_edges(1, {})};
  Layout start;
  for (std::size_t i = 0; i <= n / 2; ++i) start.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) start.push_back(static_cast<int>(i));

  std::vector<CanonicalCode> codes;
  std::optional<Layout> layout = std::move(start);
  while (layout) {
    Layout accepted = next_tree(*layout);
    codes.push_back(canonical_code(layout_to_tree(accepted)));
    layout = next_rooted_tree(accepted, std::nullopt);
  }
  return canonical_sorted(std::move(codes));
}

std::vector<Graph> enumerate_trees(std::size_t n, const TreeEnumOptions& opts) {
  if (n < 1 || n > opts.ceiling) {
    throw Error(Errc::BadParams, "tree order must be in 1.." + std::to_string(opts.ceiling) +
                                     ", got " + std::to_string(n));
  }
  return n <= opts.prufer_max_n ? enumerate_trees_prufer(n) : enumerate_trees_level_sequence(n);
}

std::vector<Graph> enumerate_trees(std::size_t lo, std::size_t hi, const TreeEnumOptions& opts) {
  std::vector<Graph> all;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto batch = enumerate_trees(n, opts);
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return all;
}

}  // namespace gammacrit
