#include <gtest/gtest.h>

#include <random>

#include "seidel/cograph.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/seidel.hpp"
#include "oracles.hpp"

using namespace seidel;

namespace {

VertexId V(std::uint32_t x) { return VertexId{x}; }

Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST(Cotree, Examples) {
  const auto k4 = cotree(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(to_sexpr(*k4), "(1 0 1 2 3)");
  EXPECT_FALSE(cotree(path_graph(4)));
  // (K2 ∪ K1) joined with K2.
  const Graph g = join(disjoint_union(complete_graph(2), Graph::edgeless(1)), complete_graph(2));
  const auto t = cotree(g);
  ASSERT_TRUE(t);
  EXPECT_EQ(to_sexpr(*t), "(1 (0 (1 0 1) 2) 3 4)");
  EXPECT_EQ(realize(*t), g);
  EXPECT_EQ(to_sexpr(*cotree(Graph::edgeless(1))), "0");
  EXPECT_FALSE(cotree(Graph{}));
}

TEST(Cotree, RecognitionMatchesP4Search) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) EXPECT_EQ(cotree(g).has_value(), !oracle::has_induced_p4(g));
  }
}

TEST(Cotree, EnumerationCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 10, 24, 66, 180, 522};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_cographs(n).size(), expected[n - 1]) << n;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (const Graph& g : enumerate_graphs(n)) count += !oracle::has_induced_p4(g);
    EXPECT_EQ(count, expected[n - 1]);
  }
}

TEST(CotreeSeidel, ClawAtLeaf) {
  const auto t = cotree(claw());
  ASSERT_TRUE(t);
  const CoTree s = cotree_seidel(*t, V(1));
  const Graph expected = Graph::from_edges(4, {{0, 1}});
  EXPECT_EQ(realize(s), expected);
  EXPECT_EQ(s.to_md_tree(), md_tree(expected));
}

TEST(CotreeSeidel, ParentIsRootLeavesTreeAlone) {
  const auto t = cotree(complete_graph(3));
  CoTree s = *t;
  EXPECT_EQ(s.seidel(V(0)), 0U);
  EXPECT_EQ(s.to_md_tree(), t->to_md_tree());
  EXPECT_THROW(s.seidel(V(9)), InvalidVertex);
}

TEST(CotreeSeidel, CommutingSquareAllCographsUpToEight) {
  std::size_t max_writes = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_cographs(n)) {
      const CoTree t = *cotree(g);
      for (VertexId v : g.vertices()) {
        CoTree s = t;
        max_writes = std::max(max_writes, s.seidel_counted(v));
        const Graph gv = seidel_complement(g, v);
        ASSERT_EQ(realize(s), gv);
        ASSERT_EQ(s.to_md_tree(), md_tree(gv));
        ASSERT_TRUE(cotree(gv));
        s.seidel(v);
        EXPECT_EQ(realize(s), g);
      }
    }
  }
  EXPECT_LE(max_writes, 8U);
}

TEST(CotreeSeidel, NodeCountAndLabelsPreserved) {
  std::mt19937 rng(1);
  for (const Graph& g : enumerate_cographs(7)) {
    CoTree t = *cotree(g);
    const std::size_t nodes = t.node_count();
    for (int k = 0; k < 5; ++k) {
      t.seidel(V(static_cast<std::uint32_t>(rng() % 7)));
      EXPECT_EQ(t.node_count(), nodes);
      auto check = [&](auto&& self, const MDNode& n) -> void {
        for (const MDNode& c : n.children) {
          if (!n.is_leaf()) {
            EXPECT_NE(c.kind, n.kind);
          }
          self(self, c);
        }
        if (!n.is_leaf()) {
          EXPECT_GE(n.children.size(), 2U);
        }
      };
      check(check, t.to_md_tree());
    }
  }
}

TEST(Ahu, Codes) {
  const auto a = cotree(Graph::from_edges(2, {{0, 1}}));
  const auto b = cotree(Graph::edgeless(2));
  EXPECT_NE(ahu_canonical(*a), ahu_canonical(*b));
  const Graph g = join(disjoint_union(complete_graph(2), Graph::edgeless(1)), complete_graph(2));
  const Graph h = relabel(g, [](VertexId v) { return VertexId{9 - v.value}; });
  EXPECT_EQ(ahu_canonical(*cotree(g)), ahu_canonical(*cotree(h)));
  EXPECT_EQ(ahu_canonical(*cotree(g)), ahu_canonical(*cotree(g)));
}

TEST(CographEquivalent, Examples) {
  const auto w = cograph_seidel_equivalent(claw(), Graph::from_edges(4, {{0, 1}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->size(), 1U);
  EXPECT_TRUE(is_isomorphic(apply_word(claw(), *w), Graph::from_edges(4, {{0, 1}})));
  EXPECT_FALSE(cograph_seidel_equivalent(complete_graph(3), Graph::edgeless(3)));
  EXPECT_EQ(cograph_seidel_equivalent(claw(), claw()), SeidelWord{});
  EXPECT_THROW(cograph_seidel_equivalent(path_graph(4), claw()), PreconditionFailed);
  EXPECT_FALSE(cograph_seidel_equivalent(claw(), complete_graph(3)));
}

TEST(CographEquivalent, AgreesWithGenericUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_cographs(n);
    for (const Graph& g : all) {
      for (const Graph& h : all) {
        AhuStats st;
        const auto w = cograph_seidel_equivalent(g, h, &st);
        const auto generic = is_seidel_equivalent(g, h);
        ASSERT_EQ(w.has_value(), generic.has_value());
        // Co-trees have fewer than 2n nodes; two hash passes per tree plus
        // one exact confirmation of two trees.
        EXPECT_LE(st.node_visits, 16 * (n + 1));
        if (w) {
          EXPECT_TRUE(is_isomorphic(apply_word(g, *w), h));
        }
      }
    }
  }
}

TEST(CographEquivalent, SmallestPivotAndReplay) {
  std::mt19937 rng(6);
  const auto all = enumerate_cographs(7);
  for (int t = 0; t < 100; ++t) {
    const Graph g = all[rng() % all.size()];
    const VertexId v = V(static_cast<std::uint32_t>(rng() % 7));
    const Graph h = seidel_complement(g, v);
    const auto w = cograph_seidel_equivalent(g, h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_isomorphic(apply_word(g, *w), h));
    if (!w->empty()) {
      EXPECT_FALSE(is_isomorphic(g, h));
      for (VertexId u : g.vertices()) {
        if (u == w->front()) break;
        EXPECT_FALSE(is_isomorphic(seidel_complement(g, u), h));
      }
    }
  }
}
