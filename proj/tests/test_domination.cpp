#include <gtest/gtest.h>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/error.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/treegen.hpp"
#include "oracles.hpp"

using namespace gammacrit;

namespace {

Graph path(std::size_t n) { return make_path(n).graph; }

std::vector<VertexList> to_vertex_lists(const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<VertexList> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<Graph> small_fixtures() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Graph& t : enumerate_trees(n)) out.push_back(std::move(t));
  }
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(make_cycle(n).graph);
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t t = s; t <= 4; ++t) out.push_back(make_complete_bipartite(s, t).graph);
  }
  out.push_back(make_wheel(5).graph);
  out.push_back(make_g_k(2).graph);
  out.push_back(make_complete(5).graph);
  out.push_back(Graph(5, {{0, 1}, {2, 3}}));
  return out;
}

}  // namespace

TEST(IsDominating, Examples) {
  EXPECT_TRUE(is_dominating(path(4), VertexList{1, 2}));
  EXPECT_FALSE(is_dominating(path(4), VertexList{0}));
  EXPECT_TRUE(is_dominating(make_star(4).graph, VertexList{0}));
}

TEST(DominationNumber, PaperValues) {
  EXPECT_EQ(domination_number(path(4)).gamma, 2U);
  EXPECT_EQ(domination_number(make_g_k(2).graph).gamma, 3U);
  EXPECT_EQ(domination_number(make_a_k(0).graph).gamma, 3U);
}

TEST(DominationNumber, MatchesBruteForce) {
  for (const Graph& g : small_fixtures()) {
    const GammaResult r = domination_number(g);
    EXPECT_EQ(r.gamma, oracle::gamma(oracle::from_graph(g))) << encode_graph6(g);
    EXPECT_EQ(r.witness.size(), r.gamma);
    EXPECT_TRUE(is_dominating(g, r.witness));
  }
}

TEST(DominationNumber, DisconnectedFlag) {
  const GammaResult r = domination_number(Graph(5, {{0, 1}, {2, 3}}));
  EXPECT_EQ(r.gamma, 3U);
  EXPECT_TRUE(r.disconnected);
}

TEST(DominationNumber, Constraints) {
  const Graph p4 = path(4);
  DominationConstraints c;
  c.forced_in = {0};
  EXPECT_EQ(domination_number(p4, c).gamma, 2U);
  c.forced_in = {0, 3};
  c.forbidden = {};
  EXPECT_EQ(domination_number(p4, c).gamma, 2U);
  DominationConstraints star;
  star.forbidden = {0};
  EXPECT_EQ(domination_number(make_star(3).graph, star).gamma, 3U);
  DominationConstraints clash;
  clash.forced_in = {1};
  clash.forbidden = {1};
  EXPECT_THROW(domination_number(p4, clash), Error);
  DominationConstraints impossible;
  impossible.forbidden = {0, 1};
  try {
    domination_number(p4, impossible);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Infeasible);
  }
}

TEST(DominationNumberTree, AgreesWithSolver) {
  EXPECT_EQ(domination_number_tree(path(6)), 2U);
  EXPECT_EQ(domination_number_tree(make_star(5).graph), 1U);
  EXPECT_EQ(domination_number_tree(make_wounded_spider(4, 1).graph), 4U);
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      EXPECT_EQ(domination_number_tree(t), domination_number(t).gamma) << encode_graph6(t);
    }
  }
  try {
    domination_number_tree(make_cycle(4).graph);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotATree);
  }
}

TEST(AllGammaSets, Examples) {
  EXPECT_EQ(all_gamma_sets(path(4)).gamma_sets,
            (std::vector<VertexList>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(all_gamma_sets(path(6)).gamma_sets, (std::vector<VertexList>{{1, 4}}));
  EXPECT_EQ(all_gamma_sets(make_star(3).graph).gamma_sets, (std::vector<VertexList>{{0}}));
}

TEST(AllGammaSets, MatchesBruteForce) {
  for (const Graph& g : small_fixtures()) {
    const GammaResult r = all_gamma_sets(g);
    EXPECT_FALSE(r.enumeration_truncated);
    EXPECT_EQ(r.gamma_sets, to_vertex_lists(oracle::gamma_sets(oracle::from_graph(g))))
        << encode_graph6(g);
  }
}

TEST(AllGammaSets, Truncation) {
  const GammaResult r = all_gamma_sets(path(4), 2);
  EXPECT_TRUE(r.enumeration_truncated);
  EXPECT_EQ(r.gamma_sets.size(), 2U);
}

TEST(TwoPacking, Examples) {
  EXPECT_TRUE(is_2packing(path(6), VertexList{1, 4}));
  EXPECT_FALSE(is_2packing(path(4), VertexList{1, 2}));
  EXPECT_FALSE(is_2packing(path(5), VertexList{0, 2}));
  EXPECT_TRUE(is_2packing(path(4), VertexList{2}));
  EXPECT_TRUE(is_2packing(path(4), VertexList{}));
}

TEST(NeverVertices, Examples) {
  EXPECT_EQ(never_vertices(path(6)), (VertexList{0, 2, 3, 5}));
  EXPECT_TRUE(never_vertices(path(4)).empty());
  EXPECT_EQ(never_vertices(make_star(3).graph), (VertexList{1, 2, 3}));
}

TEST(NeverVertices, MatchesUnionOfGammaSets) {
  for (const Graph& g : small_fixtures()) {
    std::vector<bool> seen(g.order(), false);
    for (const auto& d : oracle::gamma_sets(oracle::from_graph(g))) {
      for (std::size_t v : d) seen[v] = true;
    }
    VertexList expected;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!seen[v]) expected.push_back(v);
    }
    EXPECT_EQ(never_vertices(g), expected) << encode_graph6(g);
  }
}

TEST(Independence, ExamplesAndBruteForce) {
  EXPECT_EQ(independence_number(make_star(4).graph), 4U);
  EXPECT_EQ(independence_number(path(4)), 2U);
  EXPECT_EQ(independence_number(make_cycle(5).graph), 2U);
  for (const Graph& g : small_fixtures()) {
    EXPECT_EQ(independence_number(g), oracle::alpha(oracle::from_graph(g))) << encode_graph6(g);
  }
}

TEST(BitGraph, MaskSolversAgree) {
  for (const Graph& g : small_fixtures()) {
    const BitGraph bg(g);
    VertexMask witness = 0;
    const auto size = min_dominating_size(bg, 0, 0, &witness);
    ASSERT_TRUE(size.has_value());
    EXPECT_EQ(*size, domination_number(g).gamma);
    EXPECT_EQ((bg.closed_neighbourhood(witness)), bg.all());
    EXPECT_TRUE(has_dominating_set_within(bg, *size));
    if (*size > 0) EXPECT_FALSE(has_dominating_set_within(bg, *size - 1));
  }
}

TEST(BitGraph, RejectsLargeOrder) {
  try {
    BitGraph bg(make_path(65).graph);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}
