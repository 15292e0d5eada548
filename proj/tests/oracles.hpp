#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond the Graph container and are deliberately naive.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "seidel/graph.hpp"

namespace oracle {

using seidel::Graph;
using seidel::Row;
using seidel::VertexId;

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g = Graph::edgeless(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.set_edge_at(i, j, true);
    }
  }
  return g;
}

/// Bit k of mask is the k-th pair (i, j), i < j, in lexicographic order.
inline Graph labeled_graph(std::size_t n, Row mask) {
  Graph g = Graph::edgeless(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if ((mask >> k) & 1U) g.set_edge_at(i, j, true);
    }
  }
  return g;
}

/// Tries every bijection of the dense indices.
inline bool isomorphic_by_all_bijections(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const std::size_t n = g.order();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = g.adjacent_at(i, j) == h.adjacent_at(p[i], p[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Seidel complement straight from the definition, pair by pair.
inline Graph seidel_by_definition(const Graph& g, VertexId v) {
  Graph out = g;
  for (VertexId x : g.vertices()) {
    for (VertexId y : g.vertices()) {
      if (x == v || y == v || x == y) continue;
      if (g.adjacent(v, x) && !g.adjacent(v, y)) {
        out.set_edge_at(out.index_of(x), out.index_of(y), !g.adjacent(x, y));
      }
    }
  }
  return out;
}

/// Every subset of V that is a module, by definition, as dense-index masks.
inline std::vector<Row> all_modules(const Graph& g) {
  std::vector<Row> out;
  const std::size_t n = g.order();
  for (Row m = 0; m < (Row{1} << n); ++m) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if ((m >> x) & 1U) continue;
      const Row hit = g.row(x) & m;
      ok = hit == 0 || hit == m;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

/// Prime by definition: n >= 3 (so that n >= 4 in practice) and only
/// trivial modules.
inline bool prime_by_definition(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (Row m : all_modules(g)) {
    const int c = std::popcount(m);
    if (c >= 2 && static_cast<std::size_t>(c) < n) return false;
  }
  return true;
}

/// Induced P4 search over all 4-subsets.
inline bool has_induced_p4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          std::size_t idx[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent_at(idx[i], idx[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          std::sort(deg, deg + 4);
          if (edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) return true;
        }
  return false;
}

/// Permutation graph test by trying every permutation pi of the vertices:
/// G is a permutation graph iff some pi has i~j exactly when (i<j) and
/// pi(i)>pi(j) under some ordering of V. Here: fix σ1 ranging over orders
/// and σ2 derived, so we try all n! orders for σ1 and check the implied
/// inversion graph is consistent. Exponential; n <= 8.
inline bool permutation_by_exhaustion(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> s1(n);
  std::iota(s1.begin(), s1.end(), std::size_t{0});
  do {
    // Given σ1, the relation "u before v in σ2" is forced for every pair:
    // same relative order iff non-adjacent. It is a valid σ2 iff acyclic,
    // i.e. transitive as a tournament.
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[s1[k]] = k;
    auto before2 = [&](std::size_t u, std::size_t v) {
      const bool before1 = pos[u] < pos[v];
      return g.adjacent_at(u, v) ? !before1 : before1;
    };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (a == b || b == c || a == c) continue;
          if (before2(a, b) && before2(b, c) && !before2(a, c)) ok = false;
        }
    if (ok) return true;
  } while (std::next_permutation(s1.begin(), s1.end()));
  return false;
}

}  // namespace oracle
