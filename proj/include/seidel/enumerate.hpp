#pragma once

// Exhaustive generation of small graphs, one representative per
// isomorphism class.

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"

namespace seidel {

inline constexpr std::size_t max_exhaustive_order = 7;

/// All graphs on n vertices up to isomorphism, as canonical representatives
/// on labels 0..n-1, sorted by canonical form. Built by extending every
/// class on n-1 vertices with a new vertex in all possible ways and
/// deduplicating; every class on n vertices arises since deleting any vertex
/// lands in some class on n-1 vertices.
inline std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > max_exhaustive_order) {
    throw LimitExceeded("exhaustive enumeration is limited to n <= " + std::to_string(max_exhaustive_order) +
                        "; ingest larger corpora from graph6 files instead");
  }
  std::vector<CanonicalForm> level{CanonicalForm{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& f : level) {
      const Graph base = graph_from_form(f);
      for (Row nb = 0; nb < detail::bit(k - 1); ++nb) {
        Graph g = base;
        const std::size_t idx = g.add_vertex(VertexId{static_cast<std::uint32_t>(k - 1)});
        detail::for_each_bit(nb, [&](std::size_t j) { g.set_edge_at(idx, j, true); });
        CanonicalForm cf = canonical_labeling(g).form;
        if (seen.insert(cf).second) next.push_back(std::move(cf));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const CanonicalForm& f : level) out.push_back(graph_from_form(f));
  return out;
}

/// All graphs with 1..max_n vertices (n = 0 excluded).
inline std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace seidel
