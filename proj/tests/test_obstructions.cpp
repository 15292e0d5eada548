#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "seidel/canonical.hpp"
#include "seidel/graph6.hpp"
#include "seidel/obstructions.hpp"
#include "seidel/permutation.hpp"
#include "seidel/seidel.hpp"
#include "oracles.hpp"

using namespace seidel;

namespace {

VertexId V(std::uint32_t x) { return VertexId{x}; }

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (VertexId v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Degree multiset of XF5^m counted from the construction: every path vertex
// sees two path-or-pendant neighbours plus C and D; A and B have two
// neighbours; C and D see the whole path and one pendant.
std::vector<std::size_t> xf5_degrees(int m) {
  std::vector<std::size_t> d{2, 2};
  for (int i = 0; i <= m; ++i) d.push_back(4);
  d.push_back(static_cast<std::size_t>(m + 2));
  d.push_back(static_cast<std::size_t>(m + 2));
  std::sort(d.begin(), d.end());
  return d;
}

bool maps_by_table(const Graph& from, const Graph& to, const std::map<VertexId, VertexId>& table) {
  std::vector<std::pair<VertexId, VertexId>> pairs(table.begin(), table.end());
  return Isomorphism(pairs).maps(from, to);
}

}  // namespace

TEST(Families, VertexCounts) {
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(make_family({Family::XF5, m}).order(), static_cast<std::size_t>(m + 5));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(make_family({Family::XF4, k}).order(), static_cast<std::size_t>(k + 6));
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(make_family({Family::XF2, m}).order(), static_cast<std::size_t>(m + 5));
  for (int m = 3; m <= 7; m += 2) EXPECT_EQ(make_family({Family::XF1, m}).order(), static_cast<std::size_t>(m + 4));
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(make_family({Family::XF3, m}).order(), static_cast<std::size_t>(m + 6));
  for (int m = 2; m <= 6; m += 2) EXPECT_EQ(make_family({Family::XF6, m}).order(), static_cast<std::size_t>(m + 5));
  for (Family f : {Family::T2, Family::X2, Family::X3, Family::X30, Family::X31, Family::X32, Family::X33, Family::X34,
                   Family::X36}) {
    EXPECT_EQ(make_family({f}).order(), 7U) << family_name(f);
  }
}

TEST(Families, Xf5DegreeSequence) {
  for (int m = 1; m <= 8; ++m) {
    const Graph g = make_family({Family::XF5, m});
    EXPECT_EQ(sorted_degrees(g), xf5_degrees(m)) << m;
    EXPECT_EQ(g.size(), static_cast<std::size_t>(3 * m + 6));
  }
}

TEST(Families, HoleIsChordlessCycle) {
  for (int n = 5; n <= 12; ++n) {
    const Graph g = make_family({Family::Hole, n});
    EXPECT_EQ(g.size(), static_cast<std::size_t>(n));
    for (VertexId v : g.vertices()) EXPECT_EQ(g.degree(v), 2U);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Families, ComplementFlag) {
  const Graph g = make_family({Family::XF6, 2});
  EXPECT_EQ(make_family({Family::XF6, 2, true}), complement(g));
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(make_family({Family::Hole, 4}), PreconditionFailed);
  EXPECT_THROW(make_family({Family::XF5, 0}), PreconditionFailed);
  EXPECT_THROW(make_family({Family::XF1, 4}), PreconditionFailed);
  EXPECT_THROW(make_family({Family::XF6, 3}), PreconditionFailed);
  EXPECT_THROW(make_family({Family::XF4, -1}), PreconditionFailed);
}

TEST(Families, NamesRoundTrip) {
  for (int i = 0; i <= static_cast<int>(Family::X36); ++i) {
    const auto f = static_cast<Family>(i);
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(parse_family("hole"), Family::Hole);
  EXPECT_EQ(parse_family("xf5"), Family::XF5);
  EXPECT_FALSE(parse_family("XF7"));
}

TEST(Families, KnownMembersAreNotPermutationGraphs) {
  std::vector<FamilySpec> specs{{Family::Hole, 5}, {Family::Hole, 6}, {Family::XF1, 3}, {Family::XF2, 1},
                                {Family::XF3, 0},  {Family::XF4, 0},  {Family::XF5, 3}, {Family::XF6, 2},
                                {Family::T2},      {Family::X2},      {Family::X3},     {Family::X30},
                                {Family::X31},     {Family::X32},     {Family::X33},    {Family::X34},
                                {Family::X36}};
  for (FamilySpec s : specs) {
    for (bool co : {false, true}) {
      s.complemented = co;
      const Graph g = make_family(s);
      EXPECT_FALSE(oracle::permutation_by_exhaustion(g)) << to_string(s);
      EXPECT_FALSE(is_permutation_graph(g)) << to_string(s);
    }
  }
}

TEST(Families, Xf5EvenMembersArePermutationGraphs) {
  for (int m = 2; m <= 8; m += 2) EXPECT_TRUE(is_permutation_graph(make_family({Family::XF5, m}))) << m;
}

TEST(Families, Xf5IsSeidelStableWithNamedWitnesses) {
  for (int m = 1; m <= 8; ++m) EXPECT_TRUE(is_seidel_stable(make_family({Family::XF5, m}))) << m;
  // Path vertices are named 1..n+1 below, i.e. label i-1.
  for (int n = 3; n <= 8; ++n) {
    const Graph g = make_family({Family::XF5, n});
    const auto r = xf5_roles(n);
    const auto p = [](int i) { return V(static_cast<std::uint32_t>(i - 1)); };
    std::map<VertexId, VertexId> at_d{{r.A, p(1)}, {r.B, r.D}, {r.C, r.A}, {r.D, r.C}, {p(n + 1), r.B}};
    for (int i = 1; i <= n; ++i) at_d[p(i)] = p(i + 1);
    EXPECT_TRUE(maps_by_table(seidel_complement(g, r.D), g, at_d)) << n;

    std::map<VertexId, VertexId> at_a{{r.A, r.A}, {r.C, r.C}, {p(1), r.D}, {p(2), r.B}, {r.D, p(1)}, {r.B, p(2)}};
    for (int i = 3; i <= n + 1; ++i) at_a[p(i)] = p(n + 4 - i);
    EXPECT_TRUE(maps_by_table(seidel_complement(g, r.A), g, at_a)) << n;

    std::map<VertexId, VertexId> at_1{{p(3), r.A}, {r.B, p(n - 1)}, {r.D, p(n)},  {p(1), p(n + 1)},
                                      {r.C, r.B},  {r.A, r.D},      {p(2), r.C}};
    for (int i = 4; i <= n + 1; ++i) at_1[p(i)] = p(i - 3);
    EXPECT_TRUE(maps_by_table(seidel_complement(g, p(1)), g, at_1)) << n;
  }
}

TEST(Families, HoleClassIsHoleAndXf4) {
  for (int n = 7; n <= 12; ++n) {
    const auto cls = equivalence_class(cycle_graph(static_cast<std::size_t>(n)));
    ASSERT_EQ(cls.size(), 2U) << n;
    EXPECT_TRUE(cls.find(canonical_labeling(cycle_graph(static_cast<std::size_t>(n))).form));
    EXPECT_TRUE(cls.find(canonical_labeling(make_family({Family::XF4, n - 6})).form));
  }
}

TEST(Families, Xf5EvenAntichain) {
  for (int k = 1; k <= 4; ++k) {
    for (int l = k + 1; l <= 4; ++l) {
      const Graph small = make_family({Family::XF5, 2 * k});
      const Graph big = make_family({Family::XF5, 2 * l});
      EXPECT_FALSE(is_seidel_minor(small, big)) << k << " " << l;
    }
  }
}

TEST(ObstructionSet, SevenVertices) {
  const auto set = seidel_obstruction_set(7);
  std::vector<std::string> names;
  for (const auto& o : set) names.push_back(o.name);
  EXPECT_EQ(names, (std::vector<std::string>{"C5", "C7", "co-C7", "XF6^2", "co-XF6^2"}));
  for (const auto& o : set) EXPECT_FALSE(is_permutation_graph(o.graph)) << o.name;
}

TEST(ObstructionSet, LargerBoundsAndRejection) {
  EXPECT_THROW(seidel_obstruction_set(4), PreconditionFailed);
  EXPECT_EQ(seidel_obstruction_set(5).size(), 1U);
  const auto set = seidel_obstruction_set(12);
  std::vector<std::string> names;
  for (const auto& o : set) names.push_back(o.name);
  EXPECT_NE(std::find(names.begin(), names.end(), "XF5^5"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "C12"), names.end());
  EXPECT_EQ(std::find(names.begin(), names.end(), "XF5^3"), names.end());
}

TEST(ObstructionTest, Examples) {
  EXPECT_FALSE(is_permutation_by_obstructions(cycle_graph(5)));
  EXPECT_TRUE(is_permutation_by_obstructions(path_graph(4)));
  EXPECT_TRUE(is_permutation_by_obstructions(make_family({Family::XF4, 0})));
  EXPECT_FALSE(is_permutation_by_obstructions(cycle_graph(7)));
}

TEST(ObstructionTest, ComputedMinimalClassesUpToSix) {
  // Up to six vertices: C5, the C6 class and the co-C6 class.
  const auto found = computed_seidel_obstructions(6);
  ASSERT_EQ(found.size(), 3U);
  EXPECT_TRUE(is_seidel_equivalent(found[0], cycle_graph(5)));
  int c6 = 0, co_c6 = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    c6 += is_seidel_equivalent(found[i], cycle_graph(6)).has_value();
    co_c6 += is_seidel_equivalent(found[i], complement(cycle_graph(6))).has_value();
  }
  EXPECT_EQ(c6, 1);
  EXPECT_EQ(co_c6, 1);
}

TEST(Propositions, AllWitnessesReplay) {
  const auto results = verify_reduction_propositions(2);
  EXPECT_EQ(results.size(), 26U);
  for (const auto& r : results) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}
