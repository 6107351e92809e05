#include "gammacrit/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "gammacrit/domination.hpp"
#include "gammacrit/error.hpp"
#include "gammacrit/treegen.hpp"

namespace gammacrit {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(Errc::BadParams, why); }

std::string indexed(const char* stem, std::size_t i) { return std::string(stem) + "_" + std::to_string(i); }

/// Subdivision number and criticality index of P_n and C_n by n mod 3.
std::size_t path_cycle_q(std::size_t n) {
  switch (n % 3) {
    case 0: return 1;
    case 2: return 2;
    default: return 3;
  }
}

std::size_t ceil_third(std::size_t n) { return (n + 2) / 3; }

FamilyInstance instance(Graph g, std::string id, std::map<std::string, long long> params) {
  FamilyInstance f;
  f.graph = std::move(g);
  f.family_id = std::move(id);
  f.params = std::move(params);
  return f;
}

}  // namespace

FamilyInstance make_path(std::size_t n) {
  if (n < 1) bad("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  auto f = instance(Graph::from_edges(n, edges), "path", {{"n", static_cast<long long>(n)}});
  f.predicted.gamma = ceil_third(n);
  if (n >= 3) {
    f.predicted.sd = path_cycle_q(n);
    f.predicted.q = path_cycle_q(n);
  }
  return f;
}

FamilyInstance make_cycle(std::size_t n) {
  if (n < 3) bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, static_cast<Vertex>(n - 1)});
  auto f = instance(Graph::from_edges(n, edges), "cycle", {{"n", static_cast<long long>(n)}});
  f.predicted.gamma = ceil_third(n);
  f.predicted.sd = path_cycle_q(n);
  f.predicted.q = path_cycle_q(n);
  return f;
}

FamilyInstance make_star(std::size_t t) {
  if (t < 1) bad("star needs t >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= t; ++i) edges.push_back(Edge{0, i});
  auto f = instance(Graph::from_edges(t + 1, edges), "star", {{"t", static_cast<long long>(t)}});
  f.labels["center"] = 0;
  f.predicted.gamma = 1;
  if (t >= 2) f.predicted.q = 1;  // universal vertex
  return f;
}

FamilyInstance make_complete_bipartite(std::size_t s, std::size_t t) {
  if (s < 1 || s > t) bad("complete bipartite needs 1 <= s <= t");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < s; ++a) {
    for (Vertex b = 0; b < t; ++b) edges.push_back(Edge{a, static_cast<Vertex>(s + b)});
  }
  auto f = instance(Graph::from_edges(s + t, edges), "complete_bipartite",
                    {{"s", static_cast<long long>(s)}, {"t", static_cast<long long>(t)}});
  if (s == 1) {
    f.predicted.gamma = 1;
    if (t >= 2) f.predicted.q = 1;
  } else {
    f.predicted.q = s == 2 ? t + 1 : 2;
  }
  return f;
}

FamilyInstance make_complete(std::size_t n) {
  if (n < 1) bad("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
  }
  auto f = instance(Graph::from_edges(n, edges), "complete", {{"n", static_cast<long long>(n)}});
  f.predicted.gamma = 1;
  if (n >= 3) f.predicted.q = 1;
  return f;
}

FamilyInstance make_wheel(std::size_t rim) {
  if (rim < 3) bad("wheel needs a rim of at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.push_back(Edge{0, i});
    edges.push_back(Edge::normalized(i, i == rim ? 1 : i + 1));
  }
  auto f = instance(Graph::from_edges(rim + 1, edges), "wheel",
                    {{"n", static_cast<long long>(rim)}});
  f.labels["center"] = 0;
  f.predicted.gamma = 1;
  f.predicted.q = 1;
  return f;
}

FamilyInstance make_wounded_spider(std::size_t t, std::size_t d) {
  if (t < 1 || d < 1 || d > t) bad("wounded spider needs 1 <= d <= t");
  // x = 0; v_1..v_d are pendant on x; legs x-u_i-v_i for i = d+1..t.
  std::vector<Edge> edges;
  std::map<std::string, Vertex> labels{{"x", 0}};
  Vertex next = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    labels[indexed("v", i)] = next;
    edges.push_back(Edge{0, next++});
  }
  for (std::size_t i = d + 1; i <= t; ++i) {
    const Vertex u = next++;
    const Vertex v = next++;
    labels[indexed("u", i)] = u;
    labels[indexed("v", i)] = v;
    edges.push_back(Edge{0, u});
    edges.push_back(Edge{u, v});
  }
  auto f = instance(Graph::from_edges(next, edges), "wounded_spider",
                    {{"t", static_cast<long long>(t)}, {"d", static_cast<long long>(d)}});
  f.labels = std::move(labels);
  const std::size_t n = f.graph.order();
  f.predicted.gamma = t - d + 1;
  if (n >= 3) f.predicted.q = n - d;
  if (d == 1 && t >= 2) f.tags.push_back("slightly_wounded_spider");
  if (d == t) f.tags.push_back("star");
  return f;
}

FamilyInstance make_spider(std::size_t t) {
  if (t < 1) bad("spider needs t >= 1");
  std::vector<Edge> edges;
  std::map<std::string, Vertex> labels{{"x", 0}};
  for (std::size_t i = 1; i <= t; ++i) {
    const auto u = static_cast<Vertex>(2 * i - 1);
    const auto v = static_cast<Vertex>(2 * i);
    labels[indexed("u", i)] = u;
    labels[indexed("v", i)] = v;
    edges.push_back(Edge{0, u});
    edges.push_back(Edge{u, v});
  }
  auto f = instance(Graph::from_edges(2 * t + 1, edges), "spider",
                    {{"t", static_cast<long long>(t)}});
  f.labels = std::move(labels);
  return f;
}

FamilyInstance make_g_k(std::size_t k) {
  if (k < 1) bad("G_k needs k >= 1");
  std::vector<Edge> edges;
  std::map<std::string, Vertex> labels{{"v", 0}};
  for (std::size_t i = 1; i <= k; ++i) {
    const auto x = static_cast<Vertex>(3 * i - 2);
    const auto y = static_cast<Vertex>(3 * i - 1);
    const auto z = static_cast<Vertex>(3 * i);
    labels[indexed("x", i)] = x;
    labels[indexed("y", i)] = y;
    labels[indexed("z", i)] = z;
    for (Edge e : {Edge{0, x}, Edge{x, y}, Edge{y, z}, Edge{0, z}}) edges.push_back(e);
  }
  auto f = instance(Graph::from_edges(3 * k + 1, edges), "g_k", {{"k", static_cast<long long>(k)}});
  f.labels = std::move(labels);
  f.predicted.gamma = k + 1;
  f.predicted.q = f.graph.order() - k;
  return f;
}

FamilyInstance make_a_k(std::size_t k) {
  // v_1..v_3 = 0..2, u_1..u_{k+5} = 3..k+7, x_1..x_3 = k+8..k+10.
  const std::size_t width = k + 5;
  std::vector<Edge> edges;
  std::map<std::string, Vertex> labels;
  for (Vertex i = 0; i < 3; ++i) {
    labels[indexed("v", i + 1)] = i;
    const auto leaf = static_cast<Vertex>(3 + width + i);
    labels[indexed("x", i + 1)] = leaf;
    edges.push_back(Edge{i, leaf});
    for (std::size_t j = 0; j < width; ++j) edges.push_back(Edge{i, static_cast<Vertex>(3 + j)});
  }
  for (std::size_t j = 0; j < width; ++j) labels[indexed("u", j + 1)] = static_cast<Vertex>(3 + j);
  auto f = instance(Graph::from_edges(width + 6, edges), "a_k", {{"k", static_cast<long long>(k)}});
  f.labels = std::move(labels);
  f.predicted.gamma = 3;
  f.predicted.q = f.graph.order() + k;
  return f;
}

FamilyInstance make_corona_k1(const Graph& g, const std::string& base_name) {
  if (g.order() == 0) bad("corona needs a nonempty base graph");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "corona base must be connected");
  const std::size_t n = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::map<std::string, Vertex> labels;
  for (Vertex i = 0; i < n; ++i) {
    const auto leaf = static_cast<Vertex>(n + i);
    edges.push_back(Edge{i, leaf});
    labels[indexed("v", i + 1)] = i;
    labels[indexed("u", i + 1)] = leaf;
  }
  auto f = instance(Graph::from_edges(2 * n, edges), "corona_k1",
                    {{"n_base", static_cast<long long>(n)},
                     {"m_base", static_cast<long long>(g.size())}});
  f.labels = std::move(labels);
  f.tags.push_back("base=" + base_name);
  f.predicted.gamma = n;
  if (f.graph.order() >= 3) f.predicted.q = g.size() + 1 + independence_number(g);
  return f;
}

namespace {

using Params = std::map<std::string, long long>;

std::size_t param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) bad("missing parameter --" + key);
  if (it->second < 0) bad("parameter --" + key + " must be nonnegative");
  return static_cast<std::size_t>(it->second);
}

const std::map<std::string, std::function<FamilyInstance(const Params&)>>& registry() {
  static const std::map<std::string, std::function<FamilyInstance(const Params&)>> r{
      {"path", [](const Params& p) { return make_path(param(p, "n")); }},
      {"cycle", [](const Params& p) { return make_cycle(param(p, "n")); }},
      {"star", [](const Params& p) { return make_star(param(p, "t")); }},
      {"complete_bipartite",
       [](const Params& p) { return make_complete_bipartite(param(p, "s"), param(p, "t")); }},
      {"complete", [](const Params& p) { return make_complete(param(p, "n")); }},
      {"wheel", [](const Params& p) { return make_wheel(param(p, "n")); }},
      {"wounded_spider",
       [](const Params& p) { return make_wounded_spider(param(p, "t"), param(p, "d")); }},
      {"spider", [](const Params& p) { return make_spider(param(p, "t")); }},
      {"g_k", [](const Params& p) { return make_g_k(param(p, "k")); }},
      {"a_k", [](const Params& p) { return make_a_k(param(p, "k")); }},
  };
  return r;
}

}  // namespace

FamilyInstance make_family(const std::string& family_id, const Params& params) {
  auto it = registry().find(family_id);
  if (it == registry().end()) bad("unknown family '" + family_id + "'");
  return it->second(params);
}

std::vector<std::string> family_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : registry()) ids.push_back(id);
  return ids;
}

VertexList StatusTree::a_vertices() const {
  VertexList out;
  for (Vertex v = 0; v < status.size(); ++v) {
    if (status[v] == Status::A) out.push_back(v);
  }
  return out;
}

VertexList StatusTree::b_vertices() const {
  VertexList out;
  for (Vertex v = 0; v < status.size(); ++v) {
    if (status[v] == Status::B) out.push_back(v);
  }
  return out;
}

StatusTree family_f_base() {
  return StatusTree{Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
                    {Status::A, Status::B, Status::B, Status::A},
                    {}};
}

StatusTree family_f_apply(const StatusTree& t, FamilyOp op) {
  if (op.at >= t.graph.order()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(op.at));
  }
  const Status want = op.kind == FamilyOpKind::AttachThree ? Status::A : Status::B;
  if (t.status[op.at] != want) {
    throw Error(Errc::StatusMismatch,
                std::string(op.kind == FamilyOpKind::AttachThree ? "T1" : "T2") +
                    " at vertex " + std::to_string(op.at) + " needs status " +
                    (want == Status::A ? "A" : "B"));
  }
  const auto n = static_cast<Vertex>(t.graph.order());
  std::vector<Edge> edges(t.graph.edges().begin(), t.graph.edges().end());
  StatusTree out;
  out.status = t.status;
  out.trace = t.trace;
  out.trace.push_back(op);
  edges.push_back(Edge{op.at, n});
  edges.push_back(Edge{n, n + 1});
  if (op.kind == FamilyOpKind::AttachThree) {
    edges.push_back(Edge{n + 1, n + 2});
    out.status.insert(out.status.end(), {Status::B, Status::B, Status::A});
  } else {
    out.status.insert(out.status.end(), {Status::B, Status::A});
  }
  out.graph = Graph::from_edges(out.status.size(), edges);
  return out;
}

StatusTree family_f_replay(const std::vector<FamilyOp>& trace) {
  StatusTree t = family_f_base();
  for (const FamilyOp& op : trace) t = family_f_apply(t, op);
  return t;
}

std::vector<StatusTree> family_f_enumerate(std::size_t max_n) {
  if (max_n < 4) bad("family F enumeration needs max_n >= 4");

  // The closure runs over status-labelled trees; a tree could in principle
  // carry several labellings, each with different extensions.
  std::set<CanonicalCode> seen_labelled;
  std::map<CanonicalCode, StatusTree> by_tree;
  std::deque<StatusTree> frontier;

  auto colour_code = [](const StatusTree& t) {
    std::vector<std::uint8_t> colours(t.status.size());
    for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<std::uint8_t>(t.status[i]);
    return canonical_code(t.graph, colours);
  };
  auto admit = [&](StatusTree t) {
    if (!seen_labelled.insert(colour_code(t)).second) return;
    by_tree.try_emplace(canonical_code(t.graph), t);
    frontier.push_back(std::move(t));
  };

  admit(family_f_base());
  while (!frontier.empty()) {
    StatusTree t = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t n = t.graph.order();
    for (Vertex v = 0; v < n; ++v) {
      if (t.status[v] == Status::A && n + 3 <= max_n) {
        admit(family_f_apply(t, {FamilyOpKind::AttachThree, v}));
      }
      if (t.status[v] == Status::B && n + 2 <= max_n) {
        admit(family_f_apply(t, {FamilyOpKind::AttachTwo, v}));
      }
    }
  }

  std::vector<StatusTree> out;
  out.reserve(by_tree.size());
  for (auto& [_, t] : by_tree) out.push_back(std::move(t));
  return out;
}

}  // namespace gammacrit
