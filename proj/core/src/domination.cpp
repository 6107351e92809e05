#include "gammacrit/domination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

#include "gammacrit/error.hpp"

namespace gammacrit {

namespace {

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Branch-and-bound minimum dominating set over a BitGraph.
class MinDominatingSearch {
 public:
  MinDominatingSearch(const BitGraph& g, VertexMask forced, VertexMask forbidden)
      : g_(g), forced_(forced), allowed_(g.all() & ~forbidden & ~forced) {}

  /// Finds a set strictly smaller than `limit`; with first_only the search
  /// stops at the first one.
  std::optional<std::size_t> run(std::size_t limit, bool first_only) {
    first_only_ = first_only;
    best_size_ = limit;
    found_ = false;

    const VertexMask dominated = g_.closed_neighbourhood(forced_);
    if (!coverable(dominated, allowed_)) return std::nullopt;

    greedy(dominated);
    if (found_ && first_only_) return best_size_;
    search(forced_, popcount(forced_), dominated, allowed_);
    if (!found_) return std::nullopt;
    return best_size_;
  }

  VertexMask best_set() const { return best_set_; }

 private:
  bool coverable(VertexMask dominated, VertexMask allowed) const {
    VertexMask reach = dominated | g_.closed_neighbourhood(allowed);
    return (reach & g_.all()) == g_.all();
  }

  void accept(VertexMask set, std::size_t size) {
    if (size < best_size_) {
      best_size_ = size;
      best_set_ = set;
      found_ = true;
    }
  }

  void greedy(VertexMask dominated) {
    VertexMask chosen = forced_;
    std::size_t size = popcount(forced_);
    while ((dominated & g_.all()) != g_.all()) {
      const VertexMask undominated = g_.all() & ~dominated;
      std::size_t best_cover = 0;
      std::size_t pick = kNone;
      for (VertexMask c = allowed_ & ~chosen; c; c &= c - 1) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(c));
        const std::size_t cover = popcount(g_.closed(v) & undominated);
        if (cover > best_cover) {
          best_cover = cover;
          pick = v;
        }
      }
      if (pick == kNone) return;
      chosen |= bit(pick);
      dominated |= g_.closed(pick);
      ++size;
    }
    accept(chosen, size);
  }

  void search(VertexMask chosen, std::size_t size, VertexMask dominated, VertexMask allowed) {
    const VertexMask undominated = g_.all() & ~dominated;
    if (undominated == 0) {
      accept(chosen, size);
      return;
    }
    if (size + 1 >= best_size_) return;

    const VertexMask reachable = allowed & g_.closed_neighbourhood(undominated);
    std::size_t max_cover = 0;
    for (VertexMask c = reachable; c; c &= c - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(c));
      max_cover = std::max(max_cover, popcount(g_.closed(v) & undominated));
    }
    if (max_cover == 0) return;
    const std::size_t remaining = popcount(undominated);
    const std::size_t lower = (remaining + max_cover - 1) / max_cover;
    if (size + lower >= best_size_) return;

    // Branch on the undominated vertex with the fewest admissible dominators.
    std::size_t branch_vertex = kNone;
    std::size_t fewest = kNone;
    for (VertexMask u = undominated; u; u &= u - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(u));
      const std::size_t k = popcount(g_.closed(x) & allowed);
      if (k < fewest) {
        fewest = k;
        branch_vertex = x;
        if (k <= 1) break;
      }
    }
    if (fewest == 0) return;

    std::array<std::pair<std::size_t, std::size_t>, kMaxBitGraphOrder> order{};
    std::size_t count = 0;
    for (VertexMask c = g_.closed(branch_vertex) & allowed; c; c &= c - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(c));
      order[count++] = {popcount(g_.closed(v) & undominated), v};
    }
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });

    // Branch i takes candidate i and excludes candidates 0..i-1, so every
    // set is reached at most once.
    VertexMask excluded = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = order[i].second;
      search(chosen | bit(v), size + 1, dominated | g_.closed(v),
             allowed & ~excluded & ~bit(v));
      if (found_ && first_only_) return;
      excluded |= bit(v);
    }
  }

  const BitGraph& g_;
  VertexMask forced_;
  VertexMask allowed_;
  bool first_only_ = false;
  bool found_ = false;
  std::size_t best_size_ = kNone;
  VertexMask best_set_ = 0;
};

/// Lexicographic enumeration of k-subsets that dominate.
class DominatingSetEnumerator {
 public:
  DominatingSetEnumerator(const BitGraph& g, VertexMask forced, VertexMask forbidden,
                          std::size_t cap)
      : g_(g), cap_(cap), forced_(forced) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!(bit(v) & (forced | forbidden))) candidates_.push_back(v);
    }
    const std::size_t c = candidates_.size();
    suffix_cover_.assign(c + 1, 0);
    suffix_max_degree_.assign(c + 1, 0);
    for (std::size_t i = c; i-- > 0;) {
      const VertexMask nb = g.closed(candidates_[i]);
      suffix_cover_[i] = suffix_cover_[i + 1] | nb;
      suffix_max_degree_[i] = std::max(suffix_max_degree_[i + 1], popcount(nb));
    }
  }

  std::vector<VertexMask> run(std::size_t k, bool& truncated) {
    truncated = false;
    const std::size_t fixed = popcount(forced_);
    if (fixed > k) return {};
    recurse(0, k - fixed, forced_, g_.closed_neighbourhood(forced_));
    truncated = truncated_;
    return std::move(found_);
  }

 private:
  void recurse(std::size_t start, std::size_t remaining, VertexMask chosen,
               VertexMask dominated) {
    if (truncated_) return;
    const VertexMask undominated = g_.all() & ~dominated;
    if (remaining == 0) {
      if (undominated == 0) {
        if (found_.size() == cap_) {
          truncated_ = true;
          return;
        }
        found_.push_back(chosen);
      }
      return;
    }
    const std::size_t need = popcount(undominated);
    for (std::size_t i = start; i + remaining <= candidates_.size(); ++i) {
      // Both checks are monotone in i, so failing means no later i works.
      if (undominated & ~suffix_cover_[i]) break;
      if (remaining * suffix_max_degree_[i] < need) break;
      const std::size_t v = candidates_[i];
      recurse(i + 1, remaining - 1, chosen | bit(v), dominated | g_.closed(v));
      if (truncated_) return;
    }
  }

  const BitGraph& g_;
  std::size_t cap_;
  VertexMask forced_;
  std::vector<std::size_t> candidates_;
  std::vector<VertexMask> suffix_cover_;
  std::vector<std::size_t> suffix_max_degree_;
  std::vector<VertexMask> found_;
  bool truncated_ = false;
};

std::size_t max_independent(const BitGraph& g, VertexMask candidates, std::size_t current,
                            std::size_t best) {
  if (candidates == 0) return std::max(current, best);
  if (current + popcount(candidates) <= best) return best;

  std::size_t pivot = kNone;
  std::size_t pivot_degree = 0;
  for (VertexMask c = candidates; c; c &= c - 1) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(c));
    const std::size_t d = popcount(g.open(v) & candidates);
    if (pivot == kNone || d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  if (pivot_degree == 0) return std::max(best, current + popcount(candidates));

  best = max_independent(g, candidates & ~g.closed(pivot), current + 1, best);
  return max_independent(g, candidates & ~bit(pivot), current, best);
}

}  // namespace

std::optional<std::size_t> min_dominating_size(const BitGraph& g, VertexMask forced,
                                               VertexMask forbidden, VertexMask* witness) {
  MinDominatingSearch search(g, forced, forbidden);
  auto size = search.run(kNone, false);
  if (size && witness) *witness = search.best_set();
  return size;
}

bool has_dominating_set_within(const BitGraph& g, std::size_t k, VertexMask forced) {
  MinDominatingSearch search(g, forced, 0);
  return search.run(k + 1, true).has_value();
}

std::vector<VertexMask> dominating_sets_of_size(const BitGraph& g, std::size_t k,
                                                std::size_t cap, bool& truncated,
                                                VertexMask forced, VertexMask forbidden) {
  DominatingSetEnumerator e(g, forced, forbidden, cap);
  return e.run(k, truncated);
}

bool is_dominating(const Graph& g, std::span<const Vertex> d) {
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : d) {
    if (v >= g.order()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
    covered[v] = true;
    for (Vertex w : g.neighbours(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

GammaResult domination_number(const Graph& g, const DominationConstraints& constraints) {
  const BitGraph bg(g);
  const VertexMask forced = to_mask(constraints.forced_in, g.order());
  const VertexMask forbidden = to_mask(constraints.forbidden, g.order());
  if (forced & forbidden) throw Error(Errc::BadParams, "forced_in and forbidden intersect");

  auto size = min_dominating_size(bg, forced, forbidden);
  if (!size) throw Error(Errc::Infeasible, "constraints admit no dominating set");

  GammaResult r;
  r.gamma = *size;
  r.disconnected = !is_connected(g);
  bool truncated = false;
  auto first = dominating_sets_of_size(bg, r.gamma, 1, truncated, forced, forbidden);
  if (first.empty()) throw Error(Errc::Internal, "enumerator missed a minimum set");
  r.witness = to_vertex_list(first.front());
  return r;
}

std::size_t domination_number_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(Errc::NotATree, "domination_number_tree needs a tree");
  const std::size_t n = t.order();
  constexpr std::size_t inf = kNone / 4;

  // Preorder from root 0; processing in reverse gives children first.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbours(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }

  // in: v in D. covered: v not in D, dominated by a child.
  // open: v not in D, not yet dominated (its parent must be in D).
  std::vector<std::size_t> in(n, 1), covered(n, 0), open(n, 0), penalty(n, inf);
  for (std::size_t i = n; i-- > 0;) {
    const Vertex v = order[i];
    bool has_child = false;
    for (Vertex c : t.neighbours(v)) {
      if (v != 0 && c == parent[v]) continue;
      has_child = true;
      const std::size_t best_child = std::min(in[c], covered[c]);
      in[v] += std::min(best_child, open[c]);
      covered[v] += best_child;
      open[v] = std::min(open[v] + covered[c], inf);
      penalty[v] = std::min(penalty[v], in[c] - best_child);
    }
    covered[v] = has_child ? covered[v] + penalty[v] : inf;
  }
  return std::min(in[0], covered[0]);
}

GammaResult all_gamma_sets(const Graph& g, std::size_t cap) {
  if (cap == 0) throw Error(Errc::BadParams, "cap must be positive");
  const BitGraph bg(g);
  GammaResult r;
  r.gamma = *min_dominating_size(bg);
  r.disconnected = !is_connected(g);
  bool truncated = false;
  auto sets = dominating_sets_of_size(bg, r.gamma, cap, truncated);
  r.enumeration_truncated = truncated;
  r.gamma_sets.reserve(sets.size());
  for (VertexMask s : sets) r.gamma_sets.push_back(to_vertex_list(s));
  if (!r.gamma_sets.empty()) r.witness = r.gamma_sets.front();
  return r;
}

bool is_2packing(const Graph& g, std::span<const Vertex> a) {
  std::vector<bool> member(g.order(), false);
  for (Vertex v : a) {
    if (v >= g.order()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
    if (member[v]) return false;
    member[v] = true;
  }
  for (Vertex x : a) {
    for (Vertex y : g.neighbours(x)) {
      if (member[y]) return false;
      for (Vertex z : g.neighbours(y)) {
        if (z != x && member[z]) return false;
      }
    }
  }
  return true;
}

VertexList never_vertices(const Graph& g) {
  const BitGraph bg(g);
  const std::size_t gamma = *min_dominating_size(bg);
  VertexList out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!has_dominating_set_within(bg, gamma, bit(v))) out.push_back(v);
  }
  return out;
}

std::size_t independence_number(const Graph& g) {
  const BitGraph bg(g);
  return max_independent(bg, bg.all(), 0, 0);
}

}  // namespace gammacrit
