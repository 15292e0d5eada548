#pragma once

// Seidel complementation on tournaments, tournament modules and the
// modular decomposition of tournaments.

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seidel/error.hpp"
#include "seidel/graph.hpp"

namespace seidel {

/// A tournament on up to 64 labelled vertices: exactly one arc between any
/// two distinct vertices. Row i holds the out-neighbours of vertex i.
class Tournament {
 public:
  Tournament() = default;

  /// The transitive tournament in which lower labels beat higher ones.
  static Tournament transitive(std::size_t n) {
    Tournament t;
    t.init_labels(n);
    for (std::size_t i = 0; i < n; ++i) t.out_[i] = detail::low_mask(n) & ~detail::low_mask(i + 1);
    return t;
  }

  /// Builds from u->v arcs on vertices 0..n-1; every pair needs exactly one.
  static Tournament from_arcs(std::size_t n, std::span<const std::pair<int, int>> arcs) {
    Tournament t;
    t.init_labels(n);
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v) {
        throw InvalidVertex("bad arc " + std::to_string(u) + "->" + std::to_string(v));
      }
      const auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
      if (t.arc_at(a, b) || t.arc_at(b, a)) {
        throw PreconditionFailed("two arcs between " + std::to_string(u) + " and " + std::to_string(v));
      }
      t.out_[a] |= detail::bit(b);
    }
    t.check_complete();
    return t;
  }

  static Tournament from_arcs(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
    return from_arcs(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
  }

  /// Builds from labels and out-rows indexed like the labels.
  Tournament(std::vector<VertexId> labels, std::vector<Row> out) : labels_(std::move(labels)), out_(std::move(out)) {
    if (labels_.size() > Graph::max_order) throw LimitExceeded("tournaments are limited to 64 vertices");
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw InvalidVertex("tournament labels must be sorted and distinct");
    }
    check_complete();
  }

  std::size_t order() const noexcept { return labels_.size(); }
  std::span<const VertexId> vertices() const noexcept { return labels_; }
  VertexId label(std::size_t i) const { return labels_[i]; }
  Row all() const noexcept { return detail::low_mask(order()); }
  Row out_row(std::size_t i) const { return out_[i]; }
  Row in_row(std::size_t i) const { return all() & ~out_[i] & ~detail::bit(i); }
  bool arc_at(std::size_t a, std::size_t b) const { return (out_[a] >> b) & 1U; }

  std::size_t index_of(VertexId v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw InvalidVertex("vertex " + to_string(v) + " is not in the tournament");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// True iff u -> v.
  bool arc(VertexId u, VertexId v) const { return arc_at(index_of(u), index_of(v)); }

  void reverse_at(std::size_t a, std::size_t b) {
    out_[a] ^= detail::bit(b);
    out_[b] ^= detail::bit(a);
  }

  std::vector<std::pair<VertexId, VertexId>> arcs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t a = 0; a < order(); ++a) {
      detail::for_each_bit(out_[a], [&](std::size_t b) { out.emplace_back(labels_[a], labels_[b]); });
    }
    return out;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  void init_labels(std::size_t n) {
    if (n > Graph::max_order) throw LimitExceeded("tournaments are limited to 64 vertices");
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = VertexId{static_cast<std::uint32_t>(i)};
    out_.assign(n, 0);
  }

  void check_complete() const {
    if (out_.size() != labels_.size()) throw PreconditionFailed("one out-row per vertex is required");
    for (std::size_t a = 0; a < order(); ++a) {
      if ((out_[a] >> a) & 1U) throw InvalidVertex("self-loop at " + to_string(labels_[a]));
      if (out_[a] & ~all()) throw InvalidVertex("arc to a missing vertex");
      for (std::size_t b = a + 1; b < order(); ++b) {
        if (arc_at(a, b) == arc_at(b, a)) {
          throw PreconditionFailed("vertices " + to_string(labels_[a]) + " and " + to_string(labels_[b]) +
                                   " need exactly one arc");
        }
      }
    }
  }

  std::vector<VertexId> labels_;
  std::vector<Row> out_;
};

/// Reverses the arcs between N+(v) and N-(v) and every arc at v.
inline Tournament t_seidel_complement(Tournament t, VertexId v) {
  const std::size_t i = t.index_of(v);
  const Row plus = t.out_row(i), minus = t.in_row(i);
  detail::for_each_bit(plus, [&](std::size_t a) {
    detail::for_each_bit(minus, [&](std::size_t b) { t.reverse_at(a, b); });
  });
  for (std::size_t a = 0; a < t.order(); ++a) {
    if (a != i) t.reverse_at(i, a);
  }
  return t;
}

inline Tournament induced_subtournament(const Tournament& t, Row mask) {
  std::vector<std::size_t> keep;
  detail::for_each_bit(mask & t.all(), [&](std::size_t a) { keep.push_back(a); });
  std::vector<VertexId> labels;
  std::vector<Row> out(keep.size(), 0);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(t.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a != b && t.arc_at(keep[a], keep[b])) out[a] |= detail::bit(b);
    }
  }
  return Tournament(std::move(labels), std::move(out));
}

/// Every vertex outside `set` beats all of it or loses to all of it.
inline bool t_is_module(const Tournament& t, Row set) {
  set &= t.all();
  const Row outside = t.all() & ~set;
  bool ok = true;
  detail::for_each_bit(outside, [&](std::size_t x) {
    const Row o = t.out_row(x) & set;
    if (o != 0 && o != set) ok = false;
  });
  return ok;
}

namespace detail {

inline Row t_module_closure(const Tournament& t, Row within, Row seed) {
  Row m = seed;
  for (bool grown = true; grown;) {
    grown = false;
    for_each_bit(within & ~m, [&](std::size_t x) {
      const Row o = t.out_row(x) & m;
      if (o != 0 && o != m) {
        m |= bit(x);
        grown = true;
      }
    });
  }
  return m;
}

}  // namespace detail

/// Prime: at least three vertices and only trivial modules.
inline bool t_is_prime(const Tournament& t) {
  const std::size_t n = t.order();
  if (n < 3) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (detail::t_module_closure(t, t.all(), detail::bit(a) | detail::bit(b)) != t.all()) return false;
    }
  }
  return true;
}

// --- canonical forms and enumeration --------------------------------------

/// Smallest arc code over all vertex orders; brute force, for n <= 8.
inline std::vector<bool> t_canonical_code(const Tournament& t) {
  const std::size_t n = t.order();
  if (n > 8) throw LimitExceeded("tournament canonical codes are brute force and limited to 8 vertices");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best, code;
  do {
    code.clear();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) code.push_back(t.arc_at(p[a], p[b]));
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool t_is_isomorphic(const Tournament& a, const Tournament& b) {
  return a.order() == b.order() && t_canonical_code(a) == t_canonical_code(b);
}

/// All tournaments on n <= 8 vertices up to isomorphism, by vertex extension.
inline std::vector<Tournament> enumerate_tournaments(std::size_t n) {
  if (n > 8) throw LimitExceeded("tournament enumeration is limited to 8 vertices");
  std::vector<Tournament> level{Tournament::transitive(n == 0 ? 0 : 1)};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::vector<bool>> seen;
    std::vector<Tournament> next;
    for (const Tournament& t : level) {
      for (Row beats = 0; beats < (Row{1} << k); ++beats) {
        std::vector<VertexId> labels(t.vertices().begin(), t.vertices().end());
        labels.push_back(VertexId{static_cast<std::uint32_t>(k)});
        std::vector<Row> out(k + 1, 0);
        for (std::size_t a = 0; a < k; ++a) out[a] = t.out_row(a) | (((beats >> a) & 1U) ? 0 : detail::bit(k));
        out[k] = beats;
        Tournament u(std::move(labels), std::move(out));
        if (seen.insert(t_canonical_code(u)).second) next.push_back(std::move(u));
      }
    }
    level = std::move(next);
  }
  return level;
}

// --- modular decomposition --------------------------------------------------

enum class TNodeKind { Leaf, Linear, Prime };

/// Decomposition tree node. Children are sorted by smallest leaf label; the
/// quotient (transitive for linear nodes) has vertex i for children[i].
struct TNode {
  TNodeKind kind = TNodeKind::Leaf;
  VertexId vertex{};
  std::vector<TNode> children;
  Tournament quotient;

  bool is_leaf() const noexcept { return kind == TNodeKind::Leaf; }
  friend bool operator==(const TNode&, const TNode&) = default;
};

namespace detail {

inline Tournament quotient_of(const Tournament& t, const std::vector<Row>& parts) {
  const std::size_t k = parts.size();
  std::vector<VertexId> labels(k);
  std::vector<Row> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) labels[i] = VertexId{static_cast<std::uint32_t>(i)};
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t a = static_cast<std::size_t>(std::countr_zero(parts[i]));
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t b = static_cast<std::size_t>(std::countr_zero(parts[j]));
      if (i != j && t.arc_at(a, b)) out[i] |= bit(j);
    }
  }
  return Tournament(std::move(labels), std::move(out));
}

inline TNode t_node(TNodeKind kind, std::vector<TNode> children, const Tournament& q) {
  std::vector<std::size_t> order(children.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return children[a].vertex < children[b].vertex; });
  TNode n;
  n.kind = kind;
  std::vector<VertexId> labels(order.size());
  std::vector<Row> out(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    labels[i] = VertexId{static_cast<std::uint32_t>(i)};
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (i != j && q.arc_at(order[i], order[j])) out[i] |= bit(j);
    }
  }
  for (std::size_t i : order) n.children.push_back(std::move(children[i]));
  n.vertex = n.children.front().vertex;
  n.quotient = Tournament(std::move(labels), std::move(out));
  return n;
}

// Strong components of t[mask], sources first.
inline std::vector<Row> strong_components(const Tournament& t, Row mask) {
  std::vector<Row> comps;
  Row left = mask;
  while (left != 0) {
    // A vertex of the source component beats everything outside it; take a
    // vertex of maximal reach and shrink to the vertices that reach it back.
    Row best_comp = 0;
    for_each_bit(left, [&](std::size_t a) {
      if (best_comp != 0) return;
      Row reach = bit(a), frontier = bit(a);
      while (frontier) {
        Row next = 0;
        for_each_bit(frontier, [&](std::size_t x) { next |= t.out_row(x) & left; });
        frontier = next & ~reach;
        reach |= next;
      }
      if (reach == left) {
        Row back = bit(a), f = bit(a);
        while (f) {
          Row next = 0;
          for_each_bit(f, [&](std::size_t x) { next |= t.in_row(x) & left; });
          f = next & ~back;
          back |= next;
        }
        best_comp = back;
      }
    });
    comps.push_back(best_comp);
    left &= ~best_comp;
  }
  return comps;
}

inline TNode t_decompose(const Tournament& t, Row mask) {
  if (std::popcount(mask) == 1) {
    TNode leaf;
    leaf.vertex = t.label(static_cast<std::size_t>(std::countr_zero(mask)));
    return leaf;
  }
  const auto comps = strong_components(t, mask);
  std::vector<Row> parts;
  TNodeKind kind = TNodeKind::Linear;
  if (comps.size() > 1) {
    parts = comps;
  } else {
    kind = TNodeKind::Prime;
    Row left = mask;
    while (left != 0) {
      const std::size_t a = static_cast<std::size_t>(std::countr_zero(left));
      Row part = bit(a);
      for_each_bit(mask & ~bit(a), [&](std::size_t b) {
        const Row c = t_module_closure(t, mask, bit(a) | bit(b));
        if (c != mask) part |= c;
      });
      parts.push_back(part);
      left &= ~part;
    }
  }
  std::vector<TNode> kids;
  for (Row p : parts) kids.push_back(t_decompose(t, p));
  return t_node(kind, std::move(kids), quotient_of(t, parts));
}

}  // namespace detail

inline TNode t_md_tree(const Tournament& t) {
  if (t.order() == 0) throw PreconditionFailed("the empty tournament has no decomposition tree");
  return detail::t_decompose(t, t.all());
}

inline Tournament realize(const TNode& root) {
  std::vector<VertexId> labels;
  auto collect = [&](auto&& self, const TNode& n) -> void {
    if (n.is_leaf()) {
      labels.push_back(n.vertex);
      return;
    }
    for (const TNode& c : n.children) self(self, c);
  };
  collect(collect, root);
  std::sort(labels.begin(), labels.end());
  std::vector<Row> out(labels.size(), 0);
  auto index = [&](VertexId v) { return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()); };
  auto fill = [&](auto&& self, const TNode& n) -> Row {
    if (n.is_leaf()) return detail::bit(index(n.vertex));
    std::vector<Row> sets;
    for (const TNode& c : n.children) sets.push_back(self(self, c));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (i == j || !n.quotient.arc_at(i, j)) continue;
        detail::for_each_bit(sets[i], [&](std::size_t a) { out[a] |= sets[j]; });
      }
    }
    Row all = 0;
    for (Row s : sets) all |= s;
    return all;
  };
  fill(fill, root);
  return Tournament(std::move(labels), std::move(out));
}

/// The tree of T*v computed on the tree: the path from v to the root is
/// reversed as for graphs and every quotient on it, linear or prime, is
/// Seidel complemented at the slot leading towards v.
inline TNode t_transform_md_tree(TNode t, VertexId v) {
  if (t.is_leaf()) {
    if (t.vertex != v) throw InvalidVertex("vertex " + to_string(v) + " is not a leaf of the tree");
    return t;
  }
  std::vector<std::size_t> slots;
  auto locate = [&](auto&& self, const TNode& n) -> bool {
    if (n.is_leaf()) return n.vertex == v;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      slots.push_back(i);
      if (self(self, n.children[i])) return true;
      slots.pop_back();
    }
    return false;
  };
  if (!locate(locate, t)) throw InvalidVertex("vertex " + to_string(v) + " is not a leaf of the tree");
  std::vector<TNode> path;
  TNode cur = std::move(t);
  for (std::size_t s : slots) {
    TNode next = std::move(cur.children[s]);
    path.push_back(std::move(cur));
    cur = std::move(next);
  }
  TNode below;
  below.vertex = v;
  for (std::size_t i = 0; i < path.size(); ++i) {
    TNode& n = path[i];
    n.children[slots[i]] = std::move(below);
    const Tournament q = t_seidel_complement(n.quotient, VertexId{static_cast<std::uint32_t>(slots[i])});
    below = detail::t_node(n.kind, std::move(n.children), q);
  }
  return below;
}

/// `(L [0>1 ...] ...)` for linear nodes, `(Q [...] ...)` for prime ones.
inline std::string to_sexpr(const TNode& n) {
  if (n.is_leaf()) return to_string(n.vertex);
  std::string out = n.kind == TNodeKind::Linear ? "(L [" : "(Q [";
  bool first = true;
  for (const auto& [a, b] : n.quotient.arcs()) {
    out += (first ? "" : " ") + to_string(a) + ">" + to_string(b);
    first = false;
  }
  out += ']';
  for (const TNode& c : n.children) out += ' ' + to_sexpr(c);
  return out + ')';
}

// --- text -------------------------------------------------------------------

/// First line n, then one `u v` line per arc u->v. Ids are 0..n-1.
inline std::string write_tournament(const Tournament& t) {
  std::ostringstream os;
  os << t.order() << '\n';
  for (const auto& [a, b] : t.arcs()) os << a << ' ' << b << '\n';
  return os.str();
}

inline Tournament parse_tournament(std::string_view text) {
  std::vector<std::pair<std::size_t, long>> numbers;  // offset, value
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    long value = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) throw ParseError("expected a non-negative integer", i);
    numbers.emplace_back(i, value);
    i = static_cast<std::size_t>(p - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
      throw ParseError("unexpected character", i);
    }
  }
  if (numbers.empty()) throw ParseError("missing vertex count", 0);
  const std::size_t n = static_cast<std::size_t>(numbers[0].second);
  if (numbers.size() % 2 == 0) throw ParseError("arc with a single endpoint", text.size());
  if (numbers.size() - 1 != n * (n - (n ? 1 : 0))) {
    throw ParseError("a tournament on " + std::to_string(n) + " vertices needs " + std::to_string(n * (n ? n - 1 : 0) / 2) +
                         " arcs",
                     text.size());
  }
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t k = 1; k + 1 < numbers.size(); k += 2) {
    if (static_cast<std::size_t>(numbers[k].second) >= n || static_cast<std::size_t>(numbers[k + 1].second) >= n) {
      throw ParseError("arc endpoint out of range", numbers[k].second >= static_cast<long>(n) ? numbers[k].first : numbers[k + 1].first);
    }
    arcs.emplace_back(static_cast<int>(numbers[k].second), static_cast<int>(numbers[k + 1].second));
  }
  try {
    return Tournament::from_arcs(n, arcs);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace seidel
