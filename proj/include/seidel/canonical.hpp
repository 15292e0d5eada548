#pragma once

// Canonical forms and isomorphism testing by individualization-refinement.
//
// The search refines an ordered vertex partition to an equitable one, then
// branches on the first non-singleton cell. Two prunings keep the tree small
// on the symmetric graphs that show up here (edgeless, complete, cycles,
// disjoint unions of cliques): twins in the target cell are tried once, and
// children already covered by a discovered automorphism fixing the current
// prefix are skipped. The canonical code is the lexicographically largest
// adjacency code over all leaves.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

inline constexpr std::size_t default_canonical_limit = 16;

/// Total-order key: equal iff the graphs are isomorphic. Entry k holds the
/// adjacency of canonical vertex k to canonical vertices 0..k-1.
struct CanonicalForm {
  std::vector<Row> code;

  std::size_t order() const noexcept { return code.size(); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ f.code.size();
    for (Row r : f.code) {
      h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// A bijection between the vertex sets of two graphs.
class Isomorphism {
 public:
  Isomorphism() = default;

  explicit Isomorphism(std::vector<std::pair<VertexId, VertexId>> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
  }

  static Isomorphism identity(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> p;
    for (VertexId v : g.vertices()) p.emplace_back(v, v);
    return Isomorphism(std::move(p));
  }

  std::span<const std::pair<VertexId, VertexId>> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  VertexId operator()(VertexId v) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{v, VertexId{0}});
    if (it == pairs_.end() || it->first != v) {
      throw InvalidVertex("vertex " + to_string(v) + " is not in the isomorphism domain");
    }
    return it->second;
  }

  Isomorphism inverse() const {
    std::vector<std::pair<VertexId, VertexId>> p;
    for (const auto& [a, b] : pairs_) p.emplace_back(b, a);
    return Isomorphism(std::move(p));
  }

  /// (other ∘ this): first this, then other.
  Isomorphism then(const Isomorphism& other) const {
    std::vector<std::pair<VertexId, VertexId>> p;
    for (const auto& [a, b] : pairs_) p.emplace_back(a, other(b));
    return Isomorphism(std::move(p));
  }

  /// True iff this is a bijection V(g) -> V(h) preserving edges and non-edges.
  bool maps(const Graph& g, const Graph& h) const {
    if (g.order() != h.order() || pairs_.size() != g.order()) return false;
    std::vector<VertexId> image;
    for (const auto& [a, b] : pairs_) {
      if (!g.contains(a) || !h.contains(b)) return false;
      image.push_back(b);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
        if (g.adjacent(pairs_[i].first, pairs_[j].first) != h.adjacent(pairs_[i].second, pairs_[j].second)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;

 private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;
};

/// Canonical form plus the vertex order that realizes it: order[k] is the
/// dense index of the vertex placed at canonical position k.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<std::size_t> order;
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    if (n_ == 0) return {};
    Cells cells;
    cells.emplace_back(n_);
    std::iota(cells.front().begin(), cells.front().end(), std::size_t{0});
    std::vector<std::size_t> prefix;
    search(std::move(cells), prefix);
    return {CanonicalForm{best_code_}, best_order_};
  }

 private:
  using Cell = std::vector<std::size_t>;
  using Cells = std::vector<Cell>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Row> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t v : cells[c]) masks[c] |= bit(v);
      }
      Cells next;
      next.reserve(cells.size());
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint8_t>, std::size_t>> sig;
        sig.reserve(cell.size());
        for (std::size_t v : cell) {
          std::vector<std::uint8_t> s(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) {
            s[c] = static_cast<std::uint8_t>(std::popcount(g_.row(v) & masks[c]));
          }
          sig.emplace_back(std::move(s), v);
        }
        std::stable_sort(sig.begin(), sig.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= sig.size(); ++i) {
          if (i == sig.size() || sig[i].first != sig[start].first) {
            Cell part;
            for (std::size_t k = start; k < i; ++k) part.push_back(sig[k].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (next.size() > 0 && sig.front().first != sig.back().first) changed = true;
      }
      cells = std::move(next);
    }
  }

  bool twins(std::size_t u, std::size_t w) const {
    return (g_.row(u) & ~bit(w)) == (g_.row(w) & ~bit(u));
  }

  std::size_t find(std::vector<std::size_t>& uf, std::size_t x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  // Orbit partition of the subgroup generated by the stored automorphisms
  // that fix every vertex of `prefix`.
  std::vector<std::size_t> orbits_fixing(const std::vector<std::size_t>& prefix) {
    std::vector<std::size_t> uf(n_);
    std::iota(uf.begin(), uf.end(), std::size_t{0});
    for (const auto& a : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](std::size_t p) { return a[p] == p; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        std::size_t rx = find(uf, x), ry = find(uf, a[x]);
        if (rx != ry) uf[rx] = ry;
      }
    }
    return uf;
  }

  void leaf(const Cells& cells) {
    std::vector<std::size_t> order;
    order.reserve(n_);
    for (const Cell& c : cells) order.push_back(c.front());
    std::vector<Row> code(n_, 0);
    std::vector<std::size_t> pos(n_);
    for (std::size_t k = 0; k < n_; ++k) pos[order[k]] = k;
    for (std::size_t k = 0; k < n_; ++k) {
      for_each_bit(g_.row(order[k]), [&](std::size_t j) {
        if (pos[j] < k) code[k] |= bit(pos[j]);
      });
    }
    if (!have_best_ || code > best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      std::vector<std::size_t> a(n_);
      for (std::size_t k = 0; k < n_; ++k) a[best_order_[k]] = order[k];
      autos_.push_back(std::move(a));
    }
  }

  void search(Cells cells, std::vector<std::size_t>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const Cell cell = cells[target];
    std::vector<std::size_t> tried;
    for (std::size_t u : cell) {
      bool skip = std::any_of(tried.begin(), tried.end(), [&](std::size_t w) { return twins(u, w); });
      if (!skip && !tried.empty() && !autos_.empty()) {
        auto uf = orbits_fixing(prefix);
        const std::size_t ru = find(uf, u);
        skip = std::any_of(tried.begin(), tried.end(), [&](std::size_t w) { return find(uf, w) == ru; });
      }
      if (skip) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back(Cell{u});
        Cell rest;
        for (std::size_t w : cell) {
          if (w != u) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(u);
      search(std::move(child), prefix);
      prefix.pop_back();
      tried.push_back(u);
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  std::vector<Row> best_code_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<std::size_t>> autos_;
};

}  // namespace detail

/// Canonical labeling without a size limit beyond Graph::max_order.
inline CanonicalLabeling canonical_labeling(const Graph& g) { return detail::CanonicalSearch(g).run(); }

/// Canonical form; graphs above `limit` vertices are rejected.
inline CanonicalForm canonical_form(const Graph& g, std::size_t limit = default_canonical_limit) {
  if (g.order() > limit) {
    throw LimitExceeded("canonical_form: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                        std::to_string(limit));
  }
  return canonical_labeling(g).form;
}

/// The canonical representative: vertices relabeled 0..n-1 in canonical order.
inline Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  return relabel_in_order(g, lab.order);
}

/// Rebuilds the canonical representative from a form.
inline Graph graph_from_form(const CanonicalForm& f) {
  Graph g = Graph::edgeless(f.order());
  for (std::size_t k = 0; k < f.order(); ++k) {
    detail::for_each_bit(f.code[k], [&](std::size_t j) { g.set_edge_at(k, j, true); });
  }
  return g;
}

/// A witness bijection g -> h when the graphs are isomorphic.
inline std::optional<Isomorphism> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  const auto lg = canonical_labeling(g);
  const auto lh = canonical_labeling(h);
  if (lg.form != lh.form) return std::nullopt;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t k = 0; k < g.order(); ++k) pairs.emplace_back(g.label(lg.order[k]), h.label(lh.order[k]));
  return Isomorphism(std::move(pairs));
}

/// Exhaustive search over bijections with degree pruning. Independent of
/// the refinement machinery; meant for small graphs and cross-checks.
inline std::optional<Isomorphism> find_isomorphism_brute_force(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (n != h.order() || g.size() != h.size()) return std::nullopt;
  std::vector<std::size_t> map(n), used(n, 0);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || g.degree_at(k) != h.degree_at(t)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = g.adjacent_at(k, j) == h.adjacent_at(t, map[j]);
      if (!ok) continue;
      used[t] = 1;
      map[k] = t;
      if (self(self, k + 1)) return true;
      used[t] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(g.label(k), h.label(map[k]));
  return Isomorphism(std::move(pairs));
}

/// True iff h is isomorphic to an induced subgraph of g. Backtracking over
/// injective maps; meant for small inputs.
inline bool contains_induced(const Graph& g, const Graph& h) {
  const std::size_t k = h.order();
  if (k > g.order()) return false;
  std::vector<std::size_t> map(k);
  Row used = 0;
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t t = 0; t < g.order(); ++t) {
      if ((used >> t) & 1U) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = h.adjacent_at(i, j) == g.adjacent_at(t, map[j]);
      if (!ok) continue;
      used |= Row{1} << t;
      map[i] = t;
      if (self(self, i + 1)) return true;
      used &= ~(Row{1} << t);
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace seidel
