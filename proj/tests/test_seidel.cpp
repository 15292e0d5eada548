#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <thread>

#include "seidel/canonical.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/graph6.hpp"
#include "seidel/minor.hpp"
#include "seidel/modular.hpp"
#include "seidel/obstructions.hpp"
#include "seidel/seidel.hpp"
#include "oracles.hpp"

using namespace seidel;

namespace {

const VertexId a{0}, b{1}, c{2}, d{3};

// Labeled reachability without memoization or isomorphism reduction:
// explores every labeled graph obtainable by complements and deletions.
bool naive_minor(const Graph& h, const Graph& g) {
  std::set<std::pair<std::vector<VertexId>, std::vector<Row>>> seen;
  std::vector<Graph> stack{g};
  while (!stack.empty()) {
    Graph s = std::move(stack.back());
    stack.pop_back();
    auto key = std::make_pair(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()),
                              std::vector<Row>(s.rows().begin(), s.rows().end()));
    if (!seen.insert(key).second) continue;
    if (s.order() == h.order()) {
      if (oracle::isomorphic_by_all_bijections(s, h)) return true;
    }
    for (VertexId v : s.vertices()) {
      stack.push_back(oracle::seidel_by_definition(s, v));
      if (s.order() > h.order()) stack.push_back(delete_vertex(s, v));
    }
  }
  return false;
}

}  // namespace

TEST(SeidelComplement, PathAtSecondVertex) {
  const Graph p4 = path_graph(4);
  const Graph r = seidel_complement(p4, b);
  EXPECT_EQ(r, Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
  EXPECT_TRUE(is_isomorphic(r, p4));
}

TEST(SeidelComplement, UniversalVertexIsFixed) {
  const Graph g = join(Graph::edgeless(1), path_graph(4));
  EXPECT_EQ(seidel_complement(g, VertexId{0}), g);
}

TEST(SeidelComplement, StarPlusStableSet) {
  for (std::size_t n : {2u, 4u, 6u}) {
    Graph g = disjoint_union(join(Graph::edgeless(1), Graph::edgeless(n)), Graph::edgeless(n));
    const Graph r = seidel_complement(g, VertexId{0});
    EXPECT_TRUE(is_connected(r));
    EXPECT_EQ(r.order(), 2 * n + 1);
    EXPECT_EQ(r.size(), n + n * n);
  }
}

TEST(SeidelComplement, MatchesDefinitionAndLaws) {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Graph g = oracle::random_graph(1 + rng() % 10, 0.5, rng);
    for (VertexId v : g.vertices()) {
      const Graph r = seidel_complement(g, v);
      ASSERT_EQ(r, oracle::seidel_by_definition(g, v));
      EXPECT_EQ(seidel_complement(r, v), g);
      EXPECT_EQ(r.neighbors(v), g.neighbors(v));
      const auto nb = g.neighbors(v);
      EXPECT_EQ(induced_subgraph(r, nb), induced_subgraph(g, nb));
      std::vector<VertexId> non;
      for (VertexId x : g.vertices())
        if (x != v && !g.adjacent(v, x)) non.push_back(x);
      EXPECT_EQ(induced_subgraph(r, non), induced_subgraph(g, non));
    }
  }
  EXPECT_THROW(seidel_complement(path_graph(3), VertexId{7}), InvalidVertex);
}

TEST(StarPivot, SwapsLabels) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(star_pivot(p3, a, b), Graph::from_edges(3, {{0, 1}, {0, 2}}));
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(2 + rng() % 8, 0.5, rng);
    for (VertexId v : g.vertices())
      for (VertexId w : g.vertices()) {
        if (v == w) continue;
        const Graph p = star_pivot(g, v, w);
        EXPECT_EQ(p, apply_word(g, {w, v, w}));
        EXPECT_EQ(p, swap_labels(g, v, w));
        EXPECT_TRUE(is_isomorphic(apply_word(g, {v, w}), seidel_complement(g, w)));
      }
  }
  EXPECT_THROW(star_pivot(p3, a, a), InvalidVertex);
  EXPECT_THROW(star_pivot(p3, a, VertexId{9}), InvalidVertex);
}

TEST(ApplyWord, Basics) {
  const Graph g = cycle_graph(6);
  EXPECT_EQ(apply_word(g, {}), g);
  EXPECT_EQ(apply_word(g, {c, c}), g);
}

TEST(EquivalenceClass, Examples) {
  EXPECT_EQ(equivalence_class(cycle_graph(5)).size(), 1u);
  EXPECT_EQ(equivalence_class(complete_graph(6)).size(), 1u);
  const auto c7 = equivalence_class(cycle_graph(7));
  EXPECT_EQ(c7.size(), 2u);
  EXPECT_TRUE(c7.find(canonical_form(make_family({Family::XF4, 1}))));
  EXPECT_EQ(equivalence_class(Graph{}).size(), 1u);
}

TEST(EquivalenceClass, SizeBoundAndWords) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto cls = equivalence_class(g);
      EXPECT_LE(cls.size(), n + 1);
      for (const auto& m : cls.members) {
        EXPECT_LE(m.word.size(), 1u);
        EXPECT_EQ(apply_word(g, m.word), m.graph);
      }
    }
  }
}

TEST(EquivalenceClass, ClosedUnderLongerWords) {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(2 + rng() % 7, 0.5, rng);
    const auto cls = equivalence_class(g);
    SeidelWord w;
    for (int k = 0; k < 6; ++k) w.push_back(g.label(rng() % g.order()));
    EXPECT_TRUE(cls.find(canonical_form(apply_word(g, w)))) << write_graph6(g);
  }
}

TEST(IsSeidelEquivalent, Examples) {
  const Graph g = path_graph(6);
  auto w = is_seidel_equivalent(g, seidel_complement(g, c));
  ASSERT_TRUE(w);
  EXPECT_LE(w->size(), 1u);
  EXPECT_TRUE(is_isomorphic(apply_word(g, *w), seidel_complement(g, c)));

  auto w2 = is_seidel_equivalent(cycle_graph(7), make_family({Family::XF4, 1}));
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->size(), 1u);

  EXPECT_FALSE(is_seidel_equivalent(cycle_graph(5), path_graph(5)));
  EXPECT_FALSE(is_seidel_equivalent(cycle_graph(5), cycle_graph(6)));
  EXPECT_EQ(is_seidel_equivalent(g, g), SeidelWord{});
}

TEST(IsSeidelStable, Examples) {
  EXPECT_TRUE(is_seidel_stable(path_graph(4)));
  EXPECT_TRUE(is_seidel_stable(cycle_graph(5)));
  EXPECT_TRUE(is_seidel_stable(complete_graph(5)));
  EXPECT_TRUE(is_seidel_stable(Graph::edgeless(5)));
  EXPECT_FALSE(is_seidel_stable(path_graph(5)));
}

TEST(UniversalVertexGadget, Construction) {
  const Graph gem = universal_vertex_gadget(path_graph(4));
  EXPECT_EQ(gem.order(), 5u);
  EXPECT_EQ(gem.size(), 7u);
  EXPECT_EQ(gem.degree(VertexId{4}), 4u);
  EXPECT_THROW(universal_vertex_gadget(Graph::edgeless(1)), PreconditionFailed);
  EXPECT_THROW(universal_vertex_gadget(cycle_graph(4)), PreconditionFailed);
}

TEST(UniversalVertexGadget, EquivalentExactlyWhenIsomorphic) {
  std::vector<Graph> primes;
  for (std::size_t n = 4; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      if (is_prime(g)) primes.push_back(g);
  std::mt19937 rng(2);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i; j < primes.size(); ++j) {
      if (primes[i].order() != primes[j].order()) continue;
      const bool iso = is_isomorphic(primes[i], primes[j]).has_value();
      const bool eq =
          is_seidel_equivalent(universal_vertex_gadget(primes[i]), universal_vertex_gadget(primes[j])).has_value();
      EXPECT_EQ(iso, eq) << write_graph6(primes[i]) << " " << write_graph6(primes[j]);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
  // Random labelings of 7-vertex primes.
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(7, 0.5, rng);
    if (!is_prime(g)) continue;
    Graph h = (t % 2) ? relabel(g, [](VertexId v) { return VertexId{6 - v.value}; }) : oracle::random_graph(7, 0.5, rng);
    if (!is_prime(h)) continue;
    EXPECT_EQ(is_isomorphic(g, h).has_value(),
              is_seidel_equivalent(universal_vertex_gadget(g), universal_vertex_gadget(h)).has_value());
  }
}

TEST(SeidelMinor, C6InXF4Zero) {
  const Graph xf = make_family({Family::XF4, 0});
  const Graph c6 = cycle_graph(6);
  auto w = is_seidel_minor(c6, xf);
  ASSERT_TRUE(w);
  EXPECT_TRUE(replay(xf, c6, *w));
  ASSERT_EQ(w->steps.size(), 1u);
  EXPECT_EQ(w->steps[0].kind, MinorStep::Kind::Complement);
  EXPECT_EQ(xf.degree(w->steps[0].vertex), 2u);
}

TEST(SeidelMinor, ReflexiveAndXF4InT2) {
  const Graph g = cycle_graph(7);
  auto w = is_seidel_minor(g, g);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->steps.empty());
  EXPECT_TRUE(replay(g, g, *w));
  const Graph t2 = make_family({Family::T2});
  auto w2 = is_seidel_minor(make_family({Family::XF4, 0}), t2);
  ASSERT_TRUE(w2);
  EXPECT_TRUE(replay(t2, make_family({Family::XF4, 0}), *w2));
  EXPECT_FALSE(is_seidel_minor(cycle_graph(5), path_graph(6)));
  EXPECT_THROW(is_seidel_minor(Graph{}, g), PreconditionFailed);
}

TEST(SeidelMinor, AgreesWithNaiveSearchUpToFive) {
  std::vector<Graph> all = enumerate_graphs_up_to(5);
  std::mt19937 rng(13);
  std::size_t checked = 0;
  for (const Graph& g : enumerate_graphs(5)) {
    for (const Graph& h : all) {
      if (h.order() < 3 || rng() % 6 != 0) continue;
      auto w = is_seidel_minor(h, g);
      EXPECT_EQ(w.has_value(), naive_minor(h, g)) << write_graph6(h) << " in " << write_graph6(g);
      if (w) {
        EXPECT_TRUE(replay(g, h, *w));
      }
      MinorMemo memo(h);
      EXPECT_EQ(has_seidel_minor(g, memo), w.has_value());
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(SeidelMinor, Transitivity) {
  std::mt19937 rng(17);
  int chains = 0;
  for (int t = 0; t < 60 && chains < 10; ++t) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    const Graph h = delete_vertex(seidel_complement(g, VertexId{static_cast<std::uint32_t>(rng() % 7)}),
                                  VertexId{static_cast<std::uint32_t>(rng() % 7)});
    const Graph f = delete_vertex(seidel_complement(h, h.label(rng() % 6)), h.label(rng() % 6));
    auto wh = is_seidel_minor(h, g);
    auto wf = is_seidel_minor(f, h);
    ASSERT_TRUE(wh);
    ASSERT_TRUE(wf);
    // Concatenate: replay wh, rename via its iso, then replay wf.
    MinorWitness combined;
    combined.steps = wh->steps;
    const Isomorphism back = wh->final_iso.inverse();
    for (const MinorStep& s : wf->steps) combined.steps.push_back({s.kind, back(s.vertex)});
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& [x, y] : wf->final_iso.pairs()) pairs.emplace_back(back(x), y);
    combined.final_iso = Isomorphism(std::move(pairs));
    EXPECT_TRUE(replay(g, f, combined));
    EXPECT_TRUE(is_seidel_minor(f, g));
    ++chains;
  }
}

TEST(Witness, TextRoundTrip) {
  const Graph xf = make_family({Family::XF4, 0});
  const Graph c6 = cycle_graph(6);
  auto w = is_seidel_minor(c6, xf);
  ASSERT_TRUE(w);
  const std::string text = write_witness(*w, &c6);
  const auto parsed = parse_witness(text);
  EXPECT_EQ(parsed.witness.steps, w->steps);
  EXPECT_EQ(parsed.witness.final_iso, w->final_iso);
  ASSERT_TRUE(parsed.target);
  EXPECT_TRUE(replay(xf, *parsed.target, parsed.witness));
}

TEST(Witness, ParseErrors) {
  EXPECT_THROW(parse_witness("C 1\n"), ParseError);
  EXPECT_THROW(parse_witness("X 1\nISO 0->0\n"), ParseError);
  try {
    parse_witness("C 1\nD q\nISO\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_FALSE(replay(path_graph(3), path_graph(2), parse_witness("D 9\nISO 0->0 1->1\n").witness));
}

TEST(ShardedMemo, ConcurrentInsertKeepsFirstValue) {
  ShardedMemo<int> memo;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&memo, t] {
      for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) memo.insert(canonical_form(g), t);
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(memo.size(), 1u + 2 + 4 + 11 + 34);
}
