#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "seidel/canonical.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/modular.hpp"
#include "seidel/permutation.hpp"
#include "seidel/seidel.hpp"
#include "oracles.hpp"

using namespace seidel;

namespace {

VertexId V(std::uint32_t x) { return VertexId{x}; }

std::vector<VertexId> seq(std::initializer_list<std::uint32_t> xs) {
  std::vector<VertexId> out;
  for (auto x : xs) out.push_back(V(x));
  return out;
}

PermRep random_rep(std::size_t n, std::mt19937& rng) {
  std::vector<VertexId> a;
  for (std::uint32_t i = 0; i < n; ++i) a.push_back(V(i));
  auto b = a;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  return PermRep(a, b);
}

}  // namespace

TEST(PermRep, RealizeExamples) {
  const PermRep r(seq({1, 2, 3, 4}), seq({3, 1, 4, 2}));
  const Graph g = realize(r);
  std::vector<std::pair<VertexId, VertexId>> expect{{V(1), V(3)}, {V(2), V(3)}, {V(2), V(4)}};
  EXPECT_EQ(g.edges(), expect);
  EXPECT_EQ(realize(PermRep(seq({0, 1, 2}), seq({0, 1, 2}))).size(), 0U);
  EXPECT_EQ(realize(PermRep(seq({0, 1, 2, 3}), seq({3, 2, 1, 0}))).size(), 6U);
}

TEST(PermRep, RejectsMismatchedSets) {
  EXPECT_THROW(PermRep(seq({0, 1}), seq({0, 2})), InvalidVertex);
  EXPECT_THROW(PermRep(seq({0, 0}), seq({0, 0})), InvalidVertex);
}

TEST(OpS, WorkedExample) {
  const PermRep r(seq({1, 2, 3, 4}), seq({3, 1, 4, 2}));
  const PermRep s = op_s(r, V(3));
  EXPECT_EQ(s.sigma1(), seq({4, 3, 1, 2}));
  EXPECT_EQ(s.sigma2(), seq({1, 4, 2, 3}));
  EXPECT_EQ(realize(s), seidel_complement(realize(r), V(3)));
  std::vector<std::pair<VertexId, VertexId>> expect{{V(1), V(3)}, {V(1), V(4)}, {V(2), V(3)}};
  EXPECT_EQ(realize(s).edges(), expect);
}

TEST(OpS, FirstInBothSequences) {
  const PermRep r(seq({0, 1, 2}), seq({0, 2, 1}));
  const PermRep s = op_s(r, V(0));
  EXPECT_EQ(s.sigma1(), seq({1, 2, 0}));
  EXPECT_EQ(s.sigma2(), seq({2, 1, 0}));
  PermRep one(seq({5}), seq({5}));
  EXPECT_EQ(op_s(one, V(5)), one);
  EXPECT_THROW(op_s(r, V(7)), InvalidVertex);
}

TEST(OpS, CommutingSquareAndConstantWrites) {
  std::mt19937 rng(42);
  std::size_t max_writes = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 10;
    PermRep r = random_rep(n, rng);
    for (VertexId v : r.vertices()) {
      PermRep s = r;
      const std::size_t writes = s.apply_s(v);
      max_writes = std::max(max_writes, writes);
      ASSERT_EQ(realize(s), seidel_complement(realize(r), v));
      EXPECT_EQ(realize(op_s(s, v)), realize(r));
    }
  }
  EXPECT_LE(max_writes, 16U);
}

TEST(LinkedOrder, ExchangeAround) {
  LinkedOrder o({0, 1, 2, 3, 4});
  const std::size_t w = o.exchange_around(2);
  EXPECT_EQ(o.to_vector(), (std::vector<std::size_t>{3, 4, 2, 0, 1}));
  EXPECT_LE(w, 8U);
  o.exchange_around(2);
  EXPECT_EQ(o.to_vector(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  o.exchange_around(4);
  EXPECT_EQ(o.to_vector(), (std::vector<std::size_t>{4, 0, 1, 2, 3}));
}

TEST(Recognize, Examples) {
  EXPECT_TRUE(recognize(path_graph(4)));
  EXPECT_FALSE(recognize(cycle_graph(5)));
  EXPECT_TRUE(recognize(Graph::edgeless(1)));
  EXPECT_TRUE(recognize(Graph{}));
}

TEST(Recognize, AgreesWithExhaustiveSearchAndIsSound) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = recognize(g);
      ASSERT_EQ(r.has_value(), oracle::permutation_by_exhaustion(g));
      if (r) {
        EXPECT_EQ(realize(*r), g);
      }
    }
  }
}

TEST(Recognize, SoundOnRandomLabeledGraphs) {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    const PermRep r = random_rep(3 + rng() % 10, rng);
    const Graph g = relabel(realize(r), [](VertexId v) { return VertexId{v.value * 3 + 1}; });
    const auto back = recognize(g);
    ASSERT_TRUE(back);
    EXPECT_EQ(realize(*back), g);
  }
}

TEST(Recognize, ClosedUnderSeidelComplement) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_permutation_graph(g)) continue;
      for (VertexId v : g.vertices()) EXPECT_TRUE(is_permutation_graph(seidel_complement(g, v)));
    }
  }
}

TEST(TransitiveOrientation, TransitiveAndComplete) {
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    const auto arcs = transitive_orientation(g);
    if (!arcs) continue;
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        const bool ab = ((*arcs)[a] >> b) & 1U;
        const bool ba = ((*arcs)[b] >> a) & 1U;
        if (a != b) {
          EXPECT_EQ(ab || ba, g.adjacent_at(a, b));
        }
        EXPECT_FALSE(ab && ba);
        if (!ab) continue;
        for (std::size_t c = 0; c < g.order(); ++c) {
          if (((*arcs)[b] >> c) & 1U) {
            EXPECT_TRUE(((*arcs)[a] >> c) & 1U);
          }
        }
      }
    }
  }
  EXPECT_FALSE(transitive_orientation(cycle_graph(5)));
}

TEST(CanonicalDiagram, SymmetriesShareCode) {
  std::mt19937 rng(4);
  int prime = 0;
  for (int t = 0; t < 400 && prime < 40; ++t) {
    const PermRep r = random_rep(6, rng);
    if (!is_prime(realize(r))) continue;
    ++prime;
    auto s1 = r.sigma1(), s2 = r.sigma2();
    auto r1 = s1, r2 = s2;
    std::reverse(r1.begin(), r1.end());
    std::reverse(r2.begin(), r2.end());
    const auto code = canonical_diagram(r);
    EXPECT_EQ(canonical_diagram(PermRep(s2, s1)), code);
    EXPECT_EQ(canonical_diagram(PermRep(r1, r2)), code);
    EXPECT_EQ(canonical_diagram(PermRep(r2, r1)), code);
  }
  EXPECT_GT(prime, 0);
  EXPECT_THROW(canonical_diagram(PermRep(seq({0, 1, 2}), seq({0, 1, 2}))), PreconditionFailed);
}

TEST(CanonicalDiagram, EqualCodesIffIsomorphic) {
  std::vector<std::pair<PermRep, CanonicalForm>> reps;
  std::vector<VertexId> base{V(0), V(1), V(2), V(3), V(4)};
  std::vector<VertexId> perm = base;
  do {
    PermRep r(base, perm);
    if (is_prime(realize(r))) reps.emplace_back(r, canonical_labeling(realize(r)).form);
  } while (std::next_permutation(perm.begin(), perm.end(), [](VertexId a, VertexId b) { return a < b; }));
  ASSERT_FALSE(reps.empty());
  for (const auto& [a, fa] : reps) {
    for (const auto& [b, fb] : reps) EXPECT_EQ(canonical_diagram(a) == canonical_diagram(b), fa == fb);
  }
  // P4 from two labelings.
  EXPECT_EQ(canonical_diagram(PermRep(seq({1, 2, 3, 4}), seq({3, 1, 4, 2}))),
            canonical_diagram(*recognize(relabel(path_graph(4), [](VertexId v) { return VertexId{3 - v.value}; }))));
}

TEST(PermSeidelEquivalent, AgreesWithGenericDecision) {
  std::mt19937 rng(8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 6;
    PermRep a = random_rep(n, rng);
    PermRep b = (t % 2) ? op_s(a, V(static_cast<std::uint32_t>(rng() % n))) : random_rep(n, rng);
    PermEquivalenceStats st;
    const auto w = perm_seidel_equivalent(a, b, &st);
    const auto generic = is_seidel_equivalent(realize(a), realize(b));
    ASSERT_EQ(w.has_value(), generic.has_value());
    EXPECT_LE(st.comparisons, n + 1);
    if (w) {
      EXPECT_TRUE(is_isomorphic(apply_word(realize(a), *w), realize(b)));
    }
    if (t % 2) {
      EXPECT_TRUE(w);
    }
  }
}

TEST(PermSeidelEquivalent, OrderMismatch) {
  EXPECT_FALSE(perm_seidel_equivalent(PermRep(seq({0, 1}), seq({1, 0})), PermRep(seq({0}), seq({0}))));
}

TEST(Diagram, TextRoundTripAndErrors) {
  const PermRep r(seq({1, 2, 3, 4}), seq({3, 1, 4, 2}));
  EXPECT_EQ(write_diagram(r), "1 2 3 4\n3 1 4 2\n");
  EXPECT_EQ(parse_diagram(write_diagram(r)), r);
  EXPECT_EQ(parse_diagram("# comment\n0 1\n1 0\n"), PermRep(seq({0, 1}), seq({1, 0})));
  EXPECT_THROW(parse_diagram("0 1\n"), ParseError);
  EXPECT_THROW(parse_diagram("0 1\n1 0\n0 1\n"), ParseError);
  try {
    parse_diagram("0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6U);
  }
}
