#pragma once

// Finite simple undirected graphs with stable vertex labels.
//
// Adjacency is kept as one 64-bit row per vertex over a dense index; the
// dense index is the position of the vertex label in ascending label order.
// Deleting a vertex compacts the dense index but never touches the labels of
// the surviving vertices.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seidel/error.hpp"

namespace seidel {

/// Opaque, stable vertex identifier.
struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

inline std::string to_string(VertexId v) { return std::to_string(v.value); }

using Row = std::uint64_t;

namespace detail {

constexpr Row bit(std::size_t i) { return Row{1} << i; }

constexpr Row low_mask(std::size_t n) { return n >= 64 ? ~Row{0} : bit(n) - 1; }

// Drops bit `i` and shifts the higher bits down by one.
constexpr Row drop_bit(Row r, std::size_t i) {
  const Row low = r & low_mask(i);
  const Row high = i + 1 >= 64 ? Row{0} : (r >> (i + 1)) << i;
  return low | high;
}

template <typename F>
void for_each_bit(Row r, F&& f) {
  while (r != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(r));
    f(i);
    r &= r - 1;
  }
}

}  // namespace detail

class Graph {
 public:
  static constexpr std::size_t max_order = 64;

  Graph() = default;

  /// Edgeless graph over the given labels (need not be sorted, must be distinct).
  explicit Graph(std::vector<VertexId> labels) : labels_(std::move(labels)) {
    if (labels_.size() > max_order) {
      throw LimitExceeded("graph order " + std::to_string(labels_.size()) + " exceeds " +
                          std::to_string(max_order));
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw InvalidVertex("duplicate vertex label");
    }
    rows_.assign(labels_.size(), 0);
  }

  /// Edgeless graph on labels 0..n-1.
  static Graph edgeless(std::size_t n) {
    std::vector<VertexId> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = VertexId{static_cast<std::uint32_t>(i)};
    return Graph(std::move(labels));
  }

  /// Graph on 0..n-1 with exactly the listed edges; duplicates collapse.
  static Graph from_edges(std::size_t n, std::span<const std::pair<int, int>> edges) {
    Graph g = edgeless(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw InvalidVertex("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex outside 0.." + std::to_string(n) + "-1");
      }
      if (u == v) throw InvalidVertex("self-loop at vertex " + std::to_string(u));
      g.set_edge_at(static_cast<std::size_t>(u), static_cast<std::size_t>(v), true);
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (Row r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
  }

  std::span<const VertexId> vertices() const noexcept { return labels_; }
  VertexId label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(VertexId v) const noexcept {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool contains(VertexId v) const noexcept { return find(v).has_value(); }

  std::size_t index_of(VertexId v) const {
    if (auto i = find(v)) return *i;
    throw InvalidVertex("vertex " + to_string(v) + " is not in the graph");
  }

  /// Bitmask of all dense indices.
  Row all() const noexcept { return detail::low_mask(order()); }

  Row row(std::size_t i) const { return rows_.at(i); }
  std::span<const Row> rows() const noexcept { return rows_; }

  bool adjacent_at(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  bool adjacent(VertexId u, VertexId v) const { return adjacent_at(index_of(u), index_of(v)); }

  std::size_t degree_at(std::size_t i) const { return static_cast<std::size_t>(std::popcount(rows_[i])); }
  std::size_t degree(VertexId v) const { return degree_at(index_of(v)); }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    detail::for_each_bit(rows_[index_of(v)], [&](std::size_t j) { out.push_back(labels_[j]); });
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(order());
    for (std::size_t i = 0; i < order(); ++i) d[i] = degree_at(i);
    std::sort(d.begin(), d.end());
    return d;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < order(); ++i) {
      detail::for_each_bit(rows_[i] & ~detail::low_mask(i + 1),
                           [&](std::size_t j) { out.emplace_back(labels_[i], labels_[j]); });
    }
    return out;
  }

  // Builders. Library operations never mutate their inputs; these exist for
  // constructing new values.

  void set_edge_at(std::size_t i, std::size_t j, bool present) {
    if (i == j) throw InvalidVertex("self-loop at vertex " + to_string(labels_.at(i)));
    if (present) {
      rows_.at(i) |= detail::bit(j);
      rows_.at(j) |= detail::bit(i);
    } else {
      rows_.at(i) &= ~detail::bit(j);
      rows_.at(j) &= ~detail::bit(i);
    }
  }

  void add_edge(VertexId u, VertexId v) { set_edge_at(index_of(u), index_of(v), true); }
  void remove_edge(VertexId u, VertexId v) { set_edge_at(index_of(u), index_of(v), false); }

  void toggle_edge_at(std::size_t i, std::size_t j) {
    if (i == j) throw InvalidVertex("self-loop at vertex " + to_string(labels_.at(i)));
    rows_.at(i) ^= detail::bit(j);
    rows_.at(j) ^= detail::bit(i);
  }

  /// XORs `mask` into row i without touching the symmetric entries; callers
  /// must restore symmetry themselves.
  void xor_row_unchecked(std::size_t i, Row mask) { rows_[i] ^= mask; }

  /// Adds an isolated vertex. Returns its dense index.
  std::size_t add_vertex(VertexId v) {
    if (contains(v)) throw InvalidVertex("vertex " + to_string(v) + " already present");
    if (order() == max_order) throw LimitExceeded("graph order would exceed 64");
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    const auto pos = static_cast<std::size_t>(it - labels_.begin());
    for (Row& r : rows_) {
      const Row low = r & detail::low_mask(pos);
      const Row high = (r & ~detail::low_mask(pos)) << 1;
      r = low | high;
    }
    labels_.insert(it, v);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), Row{0});
    return pos;
  }

  /// Largest label plus one (0 for the empty graph).
  VertexId fresh_label() const noexcept {
    return labels_.empty() ? VertexId{0} : VertexId{labels_.back().value + 1};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph delete_vertex(const Graph& g, VertexId v);

  std::vector<VertexId> labels_;
  std::vector<Row> rows_;
};

/// Induced subgraph on V \ {v}. Surviving labels are unchanged.
inline Graph delete_vertex(const Graph& g, VertexId v) {
  const std::size_t idx = g.index_of(v);
  Graph out;
  out.labels_.reserve(g.order() - 1);
  out.rows_.reserve(g.order() - 1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i == idx) continue;
    out.labels_.push_back(g.labels_[i]);
    out.rows_.push_back(detail::drop_bit(g.rows_[i], idx));
  }
  return out;
}

/// Induced subgraph on the given vertex set (order of `keep` is irrelevant).
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (VertexId v : keep) idx.push_back(g.index_of(v));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<VertexId> labels;
  for (std::size_t i : idx) labels.push_back(g.label(i));
  Graph out(std::move(labels));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (g.adjacent_at(idx[a], idx[b])) out.set_edge_at(a, b, true);
    }
  }
  return out;
}

/// Edge uv present iff absent in g.
inline Graph complement(const Graph& g) {
  Graph out(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()));
  const Row all = g.all();
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.xor_row_unchecked(i, all & ~g.row(i) & ~detail::bit(i));
  }
  return out;
}

/// Renames vertices through `rename` (must be injective on V(g)).
inline Graph relabel(const Graph& g, const std::function<VertexId(VertexId)>& rename) {
  std::vector<VertexId> labels;
  labels.reserve(g.order());
  for (VertexId v : g.vertices()) labels.push_back(rename(v));
  Graph out(labels);
  for (const auto& [u, v] : g.edges()) out.add_edge(rename(u), rename(v));
  return out;
}

/// Relabels the vertices to 0..n-1 following `order` (order[k] gets label k).
inline Graph relabel_in_order(const Graph& g, std::span<const std::size_t> order) {
  Graph out = Graph::edgeless(order.size());
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (g.adjacent_at(order[a], order[b])) out.set_edge_at(a, b, true);
    }
  }
  return out;
}

/// Disjoint union; the vertices of `h` are shifted past the labels of `g`.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::uint32_t shift = g.fresh_label().value;
  std::vector<VertexId> labels(g.vertices().begin(), g.vertices().end());
  for (VertexId v : h.vertices()) labels.push_back(VertexId{v.value + shift});
  Graph out(std::move(labels));
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) {
    out.add_edge(VertexId{u.value + shift}, VertexId{v.value + shift});
  }
  return out;
}

/// Join: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = g.order(); j < out.order(); ++j) out.set_edge_at(i, j, true);
  }
  return out;
}

inline Graph path_graph(std::size_t n) {
  Graph g = Graph::edgeless(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge_at(i, i + 1, true);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.set_edge_at(0, n - 1, true);
  return g;
}

inline Graph complete_graph(std::size_t n) { return complement(Graph::edgeless(n)); }

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  Row seen = 1, frontier = 1;
  while (frontier != 0) {
    Row next = 0;
    detail::for_each_bit(frontier, [&](std::size_t i) { next |= g.row(i); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all();
}

/// Connected components as bitmasks over dense indices, ordered by lowest index.
inline std::vector<Row> components(const Graph& g) {
  std::vector<Row> out;
  Row left = g.all();
  while (left != 0) {
    const Row start = left & (~left + 1);
    Row seen = start, frontier = start;
    while (frontier != 0) {
      Row next = 0;
      detail::for_each_bit(frontier, [&](std::size_t i) { next |= g.row(i); });
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

inline std::vector<VertexId> labels_of(const Graph& g, Row mask) {
  std::vector<VertexId> out;
  detail::for_each_bit(mask, [&](std::size_t i) { out.push_back(g.label(i)); });
  return out;
}

}  // namespace seidel

template <>
struct std::hash<seidel::VertexId> {
  std::size_t operator()(seidel::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};
