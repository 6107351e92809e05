#include <gtest/gtest.h>

#include <cstdlib>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/criticality.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/error.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/treegen.hpp"
#include "oracles.hpp"

using namespace gammacrit;

namespace {

Graph path(std::size_t n) { return make_path(n).graph; }
Graph kst(std::size_t s, std::size_t t) { return make_complete_bipartite(s, t).graph; }

CriticalityOptions with_strategy(SearchStrategy s) {
  CriticalityOptions o;
  o.strategy = s;
  return o;
}

void expect_matches_oracle(const Graph& g, const CriticalityReport& r) {
  const auto naive = oracle::criticality(oracle::from_graph(g));
  EXPECT_EQ(r.gamma, naive.gamma) << encode_graph6(g);
  EXPECT_EQ(r.sd, naive.sd) << encode_graph6(g);
  EXPECT_EQ(r.q, naive.q) << encode_graph6(g);
}

void expect_witnesses_valid(const Graph& g, const CriticalityReport& r) {
  const std::size_t m = g.size();
  if (r.sd) {
    EXPECT_EQ(r.sd_witness.size(), *r.sd);
    EXPECT_EQ(gamma_after_subdivision(g, r.sd_witness), r.gamma + 1);
  }
  if (r.q) {
    EXPECT_LE(*r.q, m);
    if (r.sd) EXPECT_LE(*r.sd, *r.q);
    EXPECT_EQ(r.q_witness_safe.size() + 1, *r.q);
    EXPECT_EQ(gamma_after_subdivision(g, r.q_witness_safe), r.gamma);
    const std::uint64_t safe = r.q_witness_safe.mask(g);
    for (std::size_t e = 0; e < m; ++e) {
      if (safe >> e & 1U) continue;
      EXPECT_GT(gamma_after_subdivision(g, EdgeSet::from_mask(g, safe | std::uint64_t{1} << e)),
                r.gamma);
    }
  } else {
    EXPECT_EQ(gamma_after_subdivision(g, EdgeSet::from_mask(g, low_bits(m))), r.gamma);
  }
}

}  // namespace

TEST(GammaAfterSubdivision, Examples) {
  const Graph p5 = path(5);
  EXPECT_EQ(gamma_after_subdivision(p5, EdgeSet{}), 2U);
  for (std::size_t e = 0; e < p5.size(); ++e) {
    EXPECT_EQ(gamma_after_subdivision(p5, EdgeSet::from_mask(p5, std::uint64_t{1} << e)), 2U);
  }
  const Graph c3 = make_cycle(3).graph;
  EXPECT_EQ(gamma_after_subdivision(c3, EdgeSet::from_mask(c3, 1)), 2U);
}

TEST(SubdivisionNumber, Paths) {
  EXPECT_EQ(subdivision_number(path(6)).sd, 1U);
  EXPECT_EQ(subdivision_number(path(5)).sd, 2U);
  EXPECT_EQ(subdivision_number(make_cycle(7).graph).sd, 3U);
}

TEST(CriticalityIndex, PaperValues) {
  EXPECT_EQ(criticality_index(make_star(3).graph).q, 1U);
  EXPECT_EQ(criticality_index(kst(2, 3)).q, 4U);
  EXPECT_EQ(criticality_index(kst(3, 3)).q, 2U);
  EXPECT_EQ(criticality_index(path(7)).q, 3U);
}

TEST(CriticalityIndex, Preconditions) {
  auto code_of = [](const Graph& g) {
    try {
      criticality_index(g);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code_of(path(2)), Errc::OrderTooSmall);
  EXPECT_EQ(code_of(Graph(4, {{0, 1}, {2, 3}})), Errc::Disconnected);
  EXPECT_EQ(code_of(make_complete(12).graph), Errc::TooLarge);
}

TEST(CriticalityIndex, BudgetExceeded) {
  CriticalityOptions o;
  o.budget = 3;
  try {
    criticality_index(make_g_k(3).graph, o);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Budget);
  }
}

TEST(CriticalityIndex, BudgetFromEnvironment) {
  ::setenv("GAMMA_CRIT_BUDGET", "1234", 1);
  EXPECT_EQ(budget_from_environment(), 1234U);
  ::setenv("GAMMA_CRIT_BUDGET", "0", 1);
  EXPECT_THROW(budget_from_environment(), Error);
  ::unsetenv("GAMMA_CRIT_BUDGET");
  EXPECT_EQ(budget_from_environment(), kDefaultSolverBudget);
}

TEST(CriticalityIndex, MatchesNaiveOracleOnSmallTrees) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const auto r = criticality_index(t);
      expect_matches_oracle(t, r);
      expect_witnesses_valid(t, r);
    }
  }
}

TEST(CriticalityIndex, MatchesNaiveOracleOnFixtures) {
  std::vector<Graph> fixtures;
  for (std::size_t n = 3; n <= 10; ++n) fixtures.push_back(make_cycle(n).graph);
  fixtures.push_back(kst(2, 2));
  fixtures.push_back(kst(2, 3));
  fixtures.push_back(kst(2, 4));
  fixtures.push_back(kst(2, 5));
  fixtures.push_back(kst(3, 3));
  fixtures.push_back(make_complete(4).graph);
  fixtures.push_back(make_wheel(4).graph);
  fixtures.push_back(make_g_k(2).graph);
  for (const Graph& g : fixtures) {
    const auto r = criticality_index(g);
    expect_matches_oracle(g, r);
    expect_witnesses_valid(g, r);
  }
}

TEST(CriticalityIndex, StrategiesAgree) {
  std::vector<Graph> corpus;
  for (std::size_t n = 3; n <= 9; ++n) {
    for (Graph& t : enumerate_trees(n)) corpus.push_back(std::move(t));
  }
  corpus.push_back(make_g_k(3).graph);
  corpus.push_back(kst(3, 4));
  corpus.push_back(make_wheel(6).graph);
  for (const Graph& g : corpus) {
    const auto a = criticality_index(g, with_strategy(SearchStrategy::LevelwiseBitmask));
    const auto b = criticality_index(g, with_strategy(SearchStrategy::SafeSetDfs));
    EXPECT_EQ(a.stats.strategy, SearchStrategy::LevelwiseBitmask);
    EXPECT_EQ(b.stats.strategy, SearchStrategy::SafeSetDfs);
    EXPECT_EQ(a.gamma, b.gamma) << encode_graph6(g);
    EXPECT_EQ(a.sd, b.sd) << encode_graph6(g);
    EXPECT_EQ(a.q, b.q) << encode_graph6(g);
    expect_witnesses_valid(g, b);
  }
}

TEST(CriticalityIndex, LargeFamilyInstance) {
  const FamilyInstance a1 = make_a_k(1);
  const auto r = criticality_index(a1.graph);
  EXPECT_EQ(r.stats.strategy, SearchStrategy::SafeSetDfs);
  EXPECT_EQ(r.gamma, 3U);
  EXPECT_EQ(r.q, 13U);
  expect_witnesses_valid(a1.graph, r);
}

TEST(NeighbourBound, Examples) {
  for (const Graph& g : {kst(2, 3), path(6), make_star(3).graph}) {
    EXPECT_TRUE(check_neighbour_bound(g, criticality_index(g)));
  }
  CriticalityReport undefined;
  EXPECT_THROW(check_neighbour_bound(path(4), undefined), Error);
}
