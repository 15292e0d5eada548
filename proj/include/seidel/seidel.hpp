#pragma once

// The Seidel complement G*v and the equivalence relation it generates.
//
// G*v toggles every pair {x, y} with x adjacent to v and y a non-neighbour of
// v other than v itself. Pairs inside N(v), inside the non-neighbourhood, and
// pairs at v are untouched.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"

namespace seidel {

/// Sequence of vertices, applied left to right.
using SeidelWord = std::vector<VertexId>;

inline Graph seidel_complement(const Graph& g, VertexId v) {
  const std::size_t idx = g.index_of(v);
  const Row nb = g.row(idx);
  const Row non = g.all() & ~nb & ~detail::bit(idx);
  Graph out = g;
  detail::for_each_bit(nb, [&](std::size_t x) { out.xor_row_unchecked(x, non); });
  detail::for_each_bit(non, [&](std::size_t y) { out.xor_row_unchecked(y, nb); });
  return out;
}

/// G*v*w*v. Equal to g with the labels v and w exchanged.
inline Graph star_pivot(const Graph& g, VertexId v, VertexId w) {
  if (v == w) throw InvalidVertex("star_pivot needs two distinct vertices, got " + to_string(v) + " twice");
  if (!g.contains(w)) throw InvalidVertex("vertex " + to_string(w) + " is not in the graph");
  return seidel_complement(seidel_complement(seidel_complement(g, v), w), v);
}

/// g with the labels v and w exchanged.
inline Graph swap_labels(const Graph& g, VertexId v, VertexId w) {
  g.index_of(v);
  g.index_of(w);
  return relabel(g, [&](VertexId x) { return x == v ? w : x == w ? v : x; });
}

inline Graph apply_word(Graph g, const SeidelWord& word) {
  for (VertexId v : word) g = seidel_complement(g, v);
  return g;
}

inline std::string to_string(const SeidelWord& word) {
  if (word.empty()) return "()";
  std::string out;
  for (VertexId v : word) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

struct ClassMember {
  Graph graph;
  SeidelWord word;
  CanonicalForm form;
};

/// One member per isomorphism class in the Seidel class of a graph.
struct EquivalenceClass {
  std::vector<ClassMember> members;

  std::size_t size() const noexcept { return members.size(); }

  const ClassMember* find(const CanonicalForm& f) const {
    for (const auto& m : members) {
      if (m.form == f) return &m;
    }
    return nullptr;
  }
};

/// {G} together with every G*v, deduplicated up to isomorphism. Any word
/// reaches a graph isomorphic to G or to some G*v, so nothing is missing.
/// Members appear as discovered: G first, then by ascending vertex.
inline EquivalenceClass equivalence_class(const Graph& g) {
  EquivalenceClass cls;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  auto offer = [&](Graph h, SeidelWord w) {
    CanonicalForm f = canonical_labeling(h).form;
    if (seen.insert(f).second) cls.members.push_back({std::move(h), std::move(w), std::move(f)});
  };
  offer(g, {});
  for (VertexId v : g.vertices()) offer(seidel_complement(g, v), {v});
  return cls;
}

/// Empty word if g and h are isomorphic, a single vertex v with g*v ≅ h,
/// or nothing. Graphs of different order are never equivalent.
inline std::optional<SeidelWord> is_seidel_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const CanonicalForm target = canonical_labeling(h).form;
  if (canonical_labeling(g).form == target) return SeidelWord{};
  for (VertexId v : g.vertices()) {
    if (canonical_labeling(seidel_complement(g, v)).form == target) return SeidelWord{v};
  }
  return std::nullopt;
}

inline bool is_seidel_stable(const Graph& g) {
  const CanonicalForm f = canonical_labeling(g).form;
  for (VertexId v : g.vertices()) {
    if (canonical_labeling(seidel_complement(g, v)).form != f) return false;
  }
  return true;
}

}  // namespace seidel
