#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gammacrit/error.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/treegen.hpp"
#include "oracles.hpp"

using namespace gammacrit;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::normalized(perm[e.u], perm[e.v]));
  return Graph::from_edges(g.order(), edges);
}

}  // namespace

TEST(TreeCount, MatchesKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(enumerate_trees(n).size(), expected[n - 1]) << "n=" << n;
  }
}

// Pairwise non-isomorphic, and the orbit sum n!/|Aut(T)| equals Cayley's n^(n-2):
// together these certify the list is exactly one tree per class.
TEST(TreeCount, OrbitSumOracle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trees = enumerate_trees(n);
    std::vector<oracle::Simple> simple;
    for (const auto& t : trees) simple.push_back(oracle::from_graph(t));
    for (std::size_t i = 0; i < simple.size(); ++i) {
      for (std::size_t j = i + 1; j < simple.size(); ++j) {
        EXPECT_FALSE(oracle::isomorphic(simple[i], simple[j])) << "n=" << n;
      }
    }
    std::size_t labelled = 0;
    for (const auto& s : simple) labelled += oracle::factorial(n) / oracle::automorphism_count(s);
    std::size_t cayley = 1;
    for (std::size_t i = 2; i < n; ++i) cayley *= n;
    EXPECT_EQ(labelled, n == 1 ? 1 : cayley) << "n=" << n;
  }
}

TEST(TreeEnumeration, BothGeneratorsAgree) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_trees_prufer(n), enumerate_trees_level_sequence(n)) << "n=" << n;
  }
}

TEST(TreeEnumeration, Ceiling) {
  EXPECT_THROW(enumerate_trees(0), Error);
  try {
    enumerate_trees(99);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadParams);
  }
  EXPECT_EQ(enumerate_trees(4).size(), 2U);
  EXPECT_EQ(enumerate_trees(3, 5).size(), 6U);
}

TEST(TreeEnumeration, OutputIsCanonicalAndSorted) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto trees = enumerate_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      EXPECT_TRUE(is_tree(trees[i]));
      EXPECT_EQ(tree_from_code(canonical_code(trees[i])), trees[i]);
      if (i > 0) EXPECT_LT(canonical_code(trees[i - 1]), canonical_code(trees[i]));
    }
  }
}

TEST(CanonicalCode, InvariantUnderRelabelling) {
  const Graph p4 = make_path(4).graph;
  EXPECT_EQ(canonical_code(p4), canonical_code(relabel(p4, {2, 0, 3, 1})));
  EXPECT_NE(canonical_code(p4), canonical_code(make_star(3).graph));
  EXPECT_EQ(canonical_code(make_path(5).graph).bytes, canonical_code(make_path(5).graph).bytes);

  std::mt19937_64 rng(7);
  for (const Graph& t : enumerate_trees(9)) {
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(t), canonical_code(relabel(t, perm)));
  }
}

TEST(CanonicalCode, ColoursDistinguish) {
  const Graph p3 = make_path(3).graph;
  const std::vector<std::uint8_t> a{0, 1, 0};
  const std::vector<std::uint8_t> b{1, 0, 0};
  const std::vector<std::uint8_t> c{0, 0, 1};
  EXPECT_NE(canonical_code(p3, a), canonical_code(p3, b));
  EXPECT_EQ(canonical_code(p3, b), canonical_code(p3, c));
  std::vector<std::uint8_t> back;
  const Graph rebuilt = tree_from_code(canonical_code(p3, b), &back);
  EXPECT_EQ(canonical_code(rebuilt, back), canonical_code(p3, b));
}

TEST(CanonicalCode, RejectsNonTree) {
  try {
    canonical_code(make_cycle(4).graph);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotATree);
  }
}

TEST(Centers, PathsAndStars) {
  EXPECT_EQ(tree_centers(make_path(5).graph), (VertexList{2}));
  EXPECT_EQ(tree_centers(make_path(4).graph), (VertexList{1, 2}));
  EXPECT_EQ(tree_centers(make_star(4).graph), (VertexList{0}));
}

TEST(Prufer, DecodesAndCounts) {
  const std::vector<Vertex> seq{3, 3, 3};
  const Graph star = tree_from_prufer(seq);
  EXPECT_EQ(star.order(), 5U);
  EXPECT_EQ(star.degree(3), 4U);
  std::size_t count = 0;
  for_each_labelled_tree(5, [&](const Graph& t) {
    EXPECT_TRUE(is_tree(t));
    ++count;
  });
  EXPECT_EQ(count, 125U);
}
