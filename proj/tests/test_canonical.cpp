#include <map>
#include <set>

#include <gtest/gtest.h>

#include "beireg/canonical.hpp"
#include "beireg/harness.hpp"
#include "support.hpp"

using namespace beireg;
using namespace testing_support;

namespace {

void expect_relabel_invariant(const Graph& g, std::uint64_t seed, int trials = 100) {
  SeededRng rng(seed);
  const std::string key = canonical_encode(g);
  for (int i = 0; i < trials; ++i) {
    const Graph h = g.relabeled(random_permutation(rng, g.vertex_count()));
    ASSERT_EQ(canonical_encode(h), key) << to_edge_list(h);
    if (is_tree(g) || is_block_graph(g)) {
      ASSERT_EQ(canonical_form(h), canonical_form(g));
    }
  }
}

}  // namespace

TEST(Canonical, RelabeledPathsAgree) {
  EXPECT_EQ(canonical_encode(path_graph(3)), canonical_encode(Graph(3, {{1, 0}, {0, 2}})));
  EXPECT_NE(canonical_encode(star_graph(3)), canonical_encode(path_graph(4)));
}

TEST(Canonical, PaperExampleRelabelings) { expect_relabel_invariant(PaperFixture::graph(), 1); }

TEST(Canonical, TreesInvariant) {
  for (const Graph& t : enumerate_trees(8)) expect_relabel_invariant(t, 2, 20);
  expect_relabel_invariant(enumerate_trees(12).back(), 3);
}

TEST(Canonical, BlockGraphsInvariant) {
  for (const Graph& g : small_block_graphs()) expect_relabel_invariant(g, 4);
  expect_relabel_invariant(flower_graph(2, 3), 5);
}

TEST(Canonical, GeneralGraphsInvariant) {
  SeededRng rng(6);
  for (int i = 0; i < 8; ++i) expect_relabel_invariant(random_graph(rng, rng.uniform(3, 8), 1, 2), 7 + i, 20);
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(canonical_encode(c4), canonical_encode(Graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
  EXPECT_NE(canonical_encode(c4), canonical_encode(star_graph(3)));
  EXPECT_THROW(canonical_form(c4), UnsupportedError);
}

TEST(Canonical, DistinguishesNonIsomorphicBlockGraphs) {
  // Same block sizes, different attachment.
  const Graph a = glue({{complete_graph(3), 0}, {path_graph(3), 0}});
  const Graph b = glue({{complete_graph(3), 0}, {path_graph(3), 1}});
  EXPECT_NE(canonical_encode(a), canonical_encode(b));
  EXPECT_NE(canonical_encode(star_of_cliques({3, 4})), canonical_encode(star_of_cliques({3, 3, 2})));
}

TEST(Canonical, DisjointUnions) {
  const Graph u = disjoint_union(PaperFixture::graph(), complete_graph(3));
  EXPECT_EQ(canonical_encode(u), canonical_encode(disjoint_union(complete_graph(3), PaperFixture::graph())));
}

TEST(Canonical, LargeGeneralGraphUnsupported) {
  Graph g(11);
  for (Vertex v = 0; v < 11; ++v) g.add_edge(v, (v + 1) % 11);
  EXPECT_THROW(canonical_encode(g), UnsupportedError);
}

TEST(EnumerateTrees, SmallCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), expected[static_cast<std::size_t>(n) - 1]) << n;
  EXPECT_EQ(enumerate_trees(4).size(), 2u);
}

TEST(EnumerateTrees, MatchesPrueferOracle) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for_each_pruefer_tree(n, [&](const Graph& t) { seen.insert(canonical_encode(t)); });
    std::set<std::string> enumerated;
    for (const Graph& t : enumerate_trees(n)) {
      EXPECT_TRUE(is_tree(t));
      enumerated.insert(canonical_encode(t));
    }
    EXPECT_EQ(enumerated, seen) << n;
  }
}

TEST(EnumerateTrees, DeterministicAndCanonical) {
  const auto a = enumerate_trees(7);
  const auto b = enumerate_trees(7);
  EXPECT_EQ(a, b);
  for (const Graph& t : a) EXPECT_EQ(canonical_form(t), t);
}

TEST(EnumerateTrees, Limits) {
  EXPECT_THROW(enumerate_trees(13), UnsupportedError);
  EXPECT_THROW(enumerate_trees(0), PreconditionError);
}
