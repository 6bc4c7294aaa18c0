#include <gtest/gtest.h>

#include "beireg/bound.hpp"
#include "beireg/harness.hpp"
#include "support.hpp"

using namespace beireg;
using namespace testing_support;

namespace {

using P = PaperFixture;

/// Recount of a certificate from brute-force blocks only.
int recount_bound(const Graph& g, const Spine& spine, E2Variant variant) {
  const auto blocks = brute_blocks(g);
  const auto cuts = brute_cut_vertices(g);
  auto bd = [&](Vertex v) {
    int c = 0;
    for (const auto& b : blocks) c += std::count(b.begin(), b.end(), v) > 0;
    return std::max(c, 1);
  };
  auto lbd = [&](Vertex v) {
    int c = 0;
    for (const auto& b : blocks) c += b.size() >= 3 && std::count(b.begin(), b.end(), v) > 0;
    return c;
  };
  auto on_spine = [&](Vertex v) { return std::find(spine.vertices.begin(), spine.vertices.end(), v) != spine.vertices.end(); };
  int e2 = 0;
  for (const Edge& e : g.edges()) {
    bool spine_edge = false;
    for (std::size_t i = 0; i + 1 < spine.vertices.size(); ++i)
      spine_edge |= make_edge(spine.vertices[i], spine.vertices[i + 1]) == e;
    if (spine_edge || bd(e.u) > 2 || bd(e.v) > 2) continue;
    const bool bridge = std::find(blocks.begin(), blocks.end(), std::vector<Vertex>{e.u, e.v}) != blocks.end();
    if (variant == E2Variant::Literal || bridge) ++e2;
  }
  int b = 0;
  for (const auto& block : blocks) {
    if (block.size() < 3) continue;
    int cut_count = 0;
    for (Vertex v : block) cut_count += std::count(cuts.begin(), cuts.end(), v) > 0;
    if (cut_count <= 1 && std::any_of(block.begin(), block.end(), on_spine)) ++b;
  }
  int c = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!on_spine(v) && bd(v) >= 3) c += std::max(lbd(v), 2);
  return e2 + spine.length() + b + c;
}

}  // namespace

TEST(Spines, PathHasOneSpine) {
  const auto spines = find_spines(path_graph(5));
  ASSERT_EQ(spines.size(), 1u);
  EXPECT_EQ(spines[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(spines[0].length(), 4);
}

TEST(Spines, PaperExample) {
  const auto spines = find_spines(P::graph());
  EXPECT_EQ(spines.size(), 25u);
  for (const auto& s : spines) EXPECT_EQ(s.length(), 4);
  const auto horizontal = P::horizontal_spine();
  EXPECT_NE(std::find_if(spines.begin(), spines.end(), [&](const Spine& s) { return s.vertices == horizontal.vertices; }),
            spines.end());
}

TEST(Spines, Flower11) {
  // v = 0, star center c = 3, leaves l1 = 4, l2 = 5.
  const auto spines = find_spines(flower_graph(1, 1));
  ASSERT_EQ(spines.size(), 3u);
  EXPECT_EQ(spines[0].vertices, (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(spines[1].vertices, (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(spines[2].vertices, (std::vector<Vertex>{4, 3, 5}));
}

TEST(Spines, NoBridges) {
  EXPECT_TRUE(find_spines(star_of_cliques({3, 3})).empty());
  EXPECT_THROW(find_spines(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), PreconditionError);
}

TEST(Certificate, PaperHorizontalSpine) {
  const auto c = bound_certificate(P::graph(), P::horizontal_spine());
  EXPECT_EQ(c.e2, 1);
  EXPECT_EQ(c.ell(), 4);
  EXPECT_EQ(c.b, 0);
  EXPECT_EQ(c.c_set, (std::vector<CutContribution>{{P::q, 3, 0, 2}, {P::r, 3, 1, 2}}));
  EXPECT_EQ(c.bound, 9);
  EXPECT_EQ(c.dist_to_spine[P::r4], 2);
  EXPECT_EQ(c.dist_to_spine[P::a3], 0);
}

TEST(Certificate, PaperHorizontalSpineLiteral) {
  const auto c = bound_certificate(P::graph(), P::horizontal_spine(), E2Variant::Literal);
  EXPECT_EQ(c.e2, 4);
  EXPECT_EQ(c.bound, 12);
}

TEST(Certificate, Flower11SpineThroughV) {
  const auto c = bound_certificate(flower_graph(1, 1), Spine{{0, 3, 4}});
  EXPECT_EQ(c.e2, 0);
  EXPECT_EQ(c.b, 1);
  EXPECT_TRUE(c.c_set.empty());
  EXPECT_EQ(c.bound, 3);
}

TEST(Certificate, RejectsBadSpines) {
  EXPECT_THROW(bound_certificate(path_graph(5), Spine{{0, 1, 2}}), PreconditionError);
  EXPECT_THROW(bound_certificate(path_graph(5), Spine{{0}}), PreconditionError);
  EXPECT_THROW(bound_certificate(flower_graph(1, 1), Spine{{1, 0, 3}}), PreconditionError);
}

TEST(Certificate, HypothesisViolationNamesBlock) {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  try {
    theorem_bound(g);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2,3}"), std::string::npos) << e.what();
  }
}

TEST(Certificate, IndependentRecount) {
  std::vector<Graph> graphs = small_block_graphs();
  graphs.push_back(P::graph());
  SeededRng rng(31);
  for (int i = 0; i < 25; ++i) graphs.push_back(random_block_graph(rng, {4, 11, 40, 4}));
  for (const Graph& g : graphs) {
    for (const Spine& s : find_spines(g)) {
      for (E2Variant v : {E2Variant::BridgesOnly, E2Variant::Literal}) {
        const auto c = bound_certificate(g, s, v);
        EXPECT_EQ(c.bound, recount_bound(g, s, v)) << to_edge_list(g);
        EXPECT_EQ(c.bound, c.e2 + c.ell() + c.b + c.c_sum());
        EXPECT_GE(c.bound, c.ell());
        for (const auto& x : c.c_set) {
          EXPECT_FALSE(s.contains(x.v));
          EXPECT_GE(x.bd, 3);
          EXPECT_GE(x.contribution, 2);
        }
      }
    }
  }
}

TEST(TheoremBound, K2) {
  const auto t = theorem_bound(complete_graph(2));
  EXPECT_EQ(t.bound, 1);
  ASSERT_EQ(t.certificates.size(), 1u);
  EXPECT_EQ(t.certificates[0].e2, 0);
  EXPECT_EQ(t.certificates[0].b, 0);
}

TEST(TheoremBound, Flower11Policies) {
  const Graph f = flower_graph(1, 1);
  EXPECT_EQ(theorem_bound(f, E2Variant::BridgesOnly, SpinePolicy::MaxOverSpines).bound, 3);
  const auto min = theorem_bound(f, E2Variant::BridgesOnly, SpinePolicy::MinOverSpines);
  EXPECT_EQ(min.bound, 2);
  EXPECT_EQ(min.certificates[static_cast<std::size_t>(min.selected)].spine.vertices, (std::vector<Vertex>{4, 3, 5}));
}

TEST(TheoremBound, PaperExampleSpread) {
  const auto t = theorem_bound(P::graph());
  EXPECT_EQ(t.min_bound(), 9);
  EXPECT_EQ(t.max_bound(), 11);
  EXPECT_EQ(t.bound, 11);
  std::map<int, int> histogram;
  for (const auto& c : t.certificates) ++histogram[c.bound];
  EXPECT_EQ(histogram, (std::map<int, int>{{9, 12}, {10, 12}, {11, 1}}));
  const auto& top = t.certificates[static_cast<std::size_t>(t.selected)];
  EXPECT_EQ(top.spine.vertices, (std::vector<Vertex>{P::p1, P::p, P::a3, P::r, P::r4}));
  EXPECT_EQ(theorem_bound(P::graph(), E2Variant::BridgesOnly, SpinePolicy::MinOverSpines).bound, 9);
}

TEST(TheoremBound, CanonicalPolicyIsRelabelInvariant) {
  SeededRng rng(12);
  for (const Graph& g : {P::graph(), flower_graph(1, 1), flower_graph(2, 2), spider_graph({2, 2, 3})}) {
    const int value = theorem_bound(g, E2Variant::BridgesOnly, SpinePolicy::Canonical).bound;
    for (int i = 0; i < 10; ++i) {
      const Graph h = g.relabeled(random_permutation(rng, g.vertex_count()));
      EXPECT_EQ(theorem_bound(h, E2Variant::BridgesOnly, SpinePolicy::Canonical).bound, value);
    }
  }
}

TEST(TheoremBound, StarOfCliquesUsesClosedForm) {
  const auto t = theorem_bound(star_of_cliques({3, 3, 3}));
  EXPECT_TRUE(t.from_closed_form);
  EXPECT_EQ(t.bound, 3);
  EXPECT_THROW(theorem_bound(complete_graph(4)), PreconditionError);
}

TEST(TreeBound, Examples) {
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(tree_bound(path_graph(n)).bound, n - 1);
  EXPECT_EQ(tree_bound(star_graph(3)).bound, 2);
  const auto spider = tree_bound(spider_graph({2, 2, 2}));
  EXPECT_EQ(spider.bound, 5);
  EXPECT_EQ(spider.certificates[static_cast<std::size_t>(spider.selected)].e2, 1);
  EXPECT_THROW(tree_bound(complete_graph(3)), PreconditionError);
  EXPECT_THROW(tree_bound(Graph(1)), PreconditionError);
}

TEST(TreeBound, MatchesTheoremBoundOnAllTrees) {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const auto tb = tree_bound(t);
      const auto bridges = theorem_bound(t, E2Variant::BridgesOnly);
      const auto literal = theorem_bound(t, E2Variant::Literal);
      ASSERT_EQ(tb.bound, bridges.bound) << to_edge_list(t);
      ASSERT_EQ(bridges.certificates.size(), literal.certificates.size());
      for (std::size_t i = 0; i < bridges.certificates.size(); ++i) {
        EXPECT_EQ(bridges.certificates[i].bound, literal.certificates[i].bound);
        EXPECT_EQ(bridges.certificates[i].bound, tb.certificates[i].bound);
        EXPECT_EQ(bridges.certificates[i].b, 0);
        for (const auto& x : bridges.certificates[i].c_set) EXPECT_EQ(x.contribution, 2);
      }
    }
  }
}

TEST(TreeBound, CaterpillarsEqualEll) {
  SeededRng rng(4);
  for (int i = 0; i < 60; ++i) {
    const int spine = rng.uniform(1, 7);
    std::vector<int> legs;
    for (int j = 0; j + 1 < spine; ++j) legs.push_back(rng.uniform(0, 3));
    const Graph g = caterpillar_graph(spine, legs);
    const auto tb = tree_bound(g);
    EXPECT_EQ(tb.bound, tree_diameter(g));
    EXPECT_EQ(tb.min_bound(), tree_diameter(g));
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_reg(star_of_cliques({3, 3, 3})), 3);
  EXPECT_EQ(closed_form_reg(flower_graph(2, 3)), 8);
  EXPECT_EQ(closed_form_reg(caterpillar_graph(5, {1, 2, 0, 3})), 5);
  EXPECT_EQ(closed_form_reg(path_graph(6)), 5);
  EXPECT_EQ(closed_form_reg(spider_graph({2, 2, 2})), std::nullopt);
  EXPECT_EQ(closed_form_reg(P::graph()), std::nullopt);
}

TEST(Baseline, Examples) {
  const auto p5 = baseline_bounds(path_graph(5));
  EXPECT_EQ(p5.lower, 4);
  EXPECT_EQ(p5.upper, 4);
  EXPECT_EQ(p5.clique_bound, 4);
  const auto paper = baseline_bounds(P::graph());
  EXPECT_EQ(paper.lower, 4);
  EXPECT_EQ(paper.upper, 16);
  EXPECT_EQ(paper.clique_bound, 14);
  const auto star = baseline_bounds(star_graph(3));
  EXPECT_EQ(star.lower, 2);
  EXPECT_EQ(star.upper, 3);
  EXPECT_EQ(star.clique_bound, 3);
  EXPECT_EQ(baseline_bounds(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).clique_bound, std::nullopt);
}
