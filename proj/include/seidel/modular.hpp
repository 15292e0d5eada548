#pragma once

// Modular decomposition trees, computed naively, and their direct update
// under a Seidel complement.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/seidel.hpp"

namespace seidel {

enum class NodeKind { Leaf, Series, Parallel, Prime };

/// A node of a modular decomposition tree. Children are kept sorted by
/// their smallest leaf label. For a prime node, `quotient` has vertices
/// 0..k-1 standing for children[0..k-1].
struct MDNode {
  NodeKind kind = NodeKind::Leaf;
  VertexId vertex{};  // leaf label; for internal nodes the smallest leaf below
  std::vector<MDNode> children;
  Graph quotient;

  bool is_leaf() const noexcept { return kind == NodeKind::Leaf; }
  VertexId min_leaf() const noexcept { return vertex; }

  friend bool operator==(const MDNode&, const MDNode&) = default;
};

using MDTree = MDNode;

inline MDNode md_leaf(VertexId v) { return MDNode{NodeKind::Leaf, v, {}, {}}; }

/// Internal node with children put in canonical order (quotient permuted
/// along with them).
inline MDNode md_node(NodeKind kind, std::vector<MDNode> children, Graph quotient = {}) {
  std::vector<std::size_t> order(children.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return children[a].vertex < children[b].vertex; });
  MDNode n;
  n.kind = kind;
  for (std::size_t i : order) n.children.push_back(std::move(children[i]));
  n.vertex = n.children.empty() ? VertexId{} : n.children.front().vertex;
  if (kind == NodeKind::Prime) n.quotient = relabel_in_order(quotient, order);
  return n;
}

/// True iff every vertex outside `set` sees all of it or none of it.
inline bool is_module(const Graph& g, Row set) {
  const Row outside = g.all() & ~set;
  bool ok = true;
  detail::for_each_bit(outside, [&](std::size_t x) {
    const Row hit = g.row(x) & set;
    if (hit != 0 && hit != set) ok = false;
  });
  return ok;
}

inline bool is_module(const Graph& g, std::span<const VertexId> set) {
  Row m = 0;
  for (VertexId v : set) m |= detail::bit(g.index_of(v));
  return is_module(g, m);
}

namespace detail {

// Connected components of g restricted to `mask` (or of its complement).
inline std::vector<Row> parts_within(const Graph& g, Row mask, bool complemented) {
  std::vector<Row> out;
  Row left = mask;
  while (left != 0) {
    Row comp = left & (~left + 1);
    Row frontier = comp;
    while (frontier != 0) {
      Row reach = 0;
      for_each_bit(frontier, [&](std::size_t x) {
        const Row nb = complemented ? (~g.row(x) & ~bit(x)) : g.row(x);
        reach |= nb & mask;
      });
      frontier = reach & ~comp;
      comp |= reach;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

// Smallest module of g[mask] that contains `seed`.
inline Row module_closure(const Graph& g, Row mask, Row seed) {
  Row m = seed;
  bool grown = true;
  while (grown) {
    grown = false;
    for_each_bit(mask & ~m, [&](std::size_t x) {
      const Row hit = g.row(x) & m;
      if (hit != 0 && hit != m) {
        m |= bit(x);
        grown = true;
      }
    });
  }
  return m;
}

inline MDNode decompose(const Graph& g, Row mask) {
  if (std::popcount(mask) == 1) return md_leaf(g.label(static_cast<std::size_t>(std::countr_zero(mask))));
  auto build = [&](NodeKind kind, const std::vector<Row>& parts, Graph quotient = {}) {
    std::vector<MDNode> kids;
    for (Row p : parts) kids.push_back(decompose(g, p));
    return md_node(kind, std::move(kids), std::move(quotient));
  };
  if (auto comps = parts_within(g, mask, false); comps.size() > 1) return build(NodeKind::Parallel, comps);
  if (auto cocomps = parts_within(g, mask, true); cocomps.size() > 1) return build(NodeKind::Series, cocomps);

  // Both g[mask] and its complement are connected: the maximal proper
  // modules partition the vertex set, and each one is the union of the
  // proper module closures of pairs inside it.
  std::vector<Row> parts;
  Row covered = 0;
  for_each_bit(mask, [&](std::size_t v) {
    if (covered & bit(v)) return;
    Row m = bit(v);
    for_each_bit(mask & ~bit(v), [&](std::size_t w) {
      const Row c = module_closure(g, mask, bit(v) | bit(w));
      if (c != mask) m |= c;
    });
    parts.push_back(m);
    covered |= m;
  });
  Graph q = Graph::edgeless(parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const std::size_t ra = static_cast<std::size_t>(std::countr_zero(parts[a]));
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (g.row(ra) & parts[b]) q.set_edge_at(a, b, true);
    }
  }
  return build(NodeKind::Prime, parts, std::move(q));
}

}  // namespace detail

inline MDTree md_tree(const Graph& g) {
  if (g.empty()) throw PreconditionFailed("the modular decomposition of the empty graph is undefined");
  return detail::decompose(g, g.all());
}

/// Prime: at least four vertices and only trivial modules.
inline bool is_prime(const Graph& g) {
  if (g.order() < 4) return false;
  const MDTree t = md_tree(g);
  return t.kind == NodeKind::Prime &&
         std::all_of(t.children.begin(), t.children.end(), [](const MDNode& c) { return c.is_leaf(); });
}

/// Every leaf label of the subtree, in tree order.
inline void collect_leaves(const MDNode& n, std::vector<VertexId>& out) {
  if (n.is_leaf()) {
    out.push_back(n.vertex);
    return;
  }
  for (const MDNode& c : n.children) collect_leaves(c, out);
}

namespace detail {

inline void validate(const MDNode& n, bool parent_series, bool parent_parallel) {
  if (n.is_leaf()) {
    if (!n.children.empty()) throw PreconditionFailed("leaf with children");
    return;
  }
  if (n.children.size() < 2) throw PreconditionFailed("internal node with fewer than two children");
  if (n.kind == NodeKind::Series && parent_series) throw PreconditionFailed("series node under a series node");
  if (n.kind == NodeKind::Parallel && parent_parallel) throw PreconditionFailed("parallel node under a parallel node");
  if (n.kind == NodeKind::Prime) {
    if (n.quotient.order() != n.children.size()) throw PreconditionFailed("quotient order differs from child count");
    if (n.children.size() < 4 || !is_prime(n.quotient)) throw PreconditionFailed("prime node with a non-prime quotient");
  }
  for (const MDNode& c : n.children) validate(c, n.kind == NodeKind::Series, n.kind == NodeKind::Parallel);
}

}  // namespace detail

/// The graph whose decomposition is t.
inline Graph realize(const MDTree& t) {
  detail::validate(t, false, false);
  std::vector<VertexId> leaves;
  collect_leaves(t, leaves);
  Graph g(leaves);  // throws on duplicate labels
  auto fill = [&](auto&& self, const MDNode& n) -> void {
    if (n.is_leaf()) return;
    std::vector<std::vector<VertexId>> below(n.children.size());
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      collect_leaves(n.children[i], below[i]);
      self(self, n.children[i]);
    }
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        const bool edge = n.kind == NodeKind::Series ||
                          (n.kind == NodeKind::Prime && n.quotient.adjacent_at(i, j));
        if (!edge) continue;
        for (VertexId a : below[i])
          for (VertexId b : below[j]) g.add_edge(a, b);
      }
    }
  };
  fill(fill, t);
  return g;
}

/// The decomposition of G*v computed from the decomposition of G.
///
/// Let N_0 (root), ..., N_k be the ancestors of leaf v, N_k its parent. The
/// path is reversed so that N_k becomes the root: each N_i keeps its other
/// children, the slot that led towards v now holds N_{i-1}, and the slot of
/// N_0 holds v itself. Every prime quotient on the path is Seidel
/// complemented at that slot. Nothing off the path is touched.
inline MDTree transform_md_tree(MDTree t, VertexId v) {
  if (t.is_leaf()) {
    if (t.vertex != v) throw InvalidVertex("vertex " + to_string(v) + " is not a leaf of the tree");
    return t;
  }
  std::vector<std::size_t> slots;
  auto locate = [&](auto&& self, const MDNode& n) -> bool {
    if (n.is_leaf()) return n.vertex == v;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      slots.push_back(i);
      if (self(self, n.children[i])) return true;
      slots.pop_back();
    }
    return false;
  };
  if (!locate(locate, t)) throw InvalidVertex("vertex " + to_string(v) + " is not a leaf of the tree");

  // Detach the path nodes top-down, keeping their side children.
  std::vector<MDNode> path;
  MDNode cur = std::move(t);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    MDNode next = std::move(cur.children[slots[i]]);
    path.push_back(std::move(cur));
    cur = std::move(next);
  }
  MDNode below = md_leaf(v);
  for (std::size_t i = 0; i < path.size(); ++i) {
    MDNode& n = path[i];
    n.children[slots[i]] = std::move(below);
    if (n.kind == NodeKind::Prime) {
      n.quotient = seidel_complement(n.quotient, VertexId{static_cast<std::uint32_t>(slots[i])});
    }
    below = md_node(n.kind, std::move(n.children), std::move(n.quotient));
  }
  return below;
}

// --- s-expressions -------------------------------------------------------

inline std::string to_sexpr(const MDNode& n) {
  if (n.is_leaf()) return to_string(n.vertex);
  std::string out = "(";
  switch (n.kind) {
    case NodeKind::Series: out += 'S'; break;
    case NodeKind::Parallel: out += 'P'; break;
    default: {
      out += "Q [";
      bool first = true;
      for (const auto& [a, b] : n.quotient.edges()) {
        if (!first) out += ' ';
        first = false;
        out += to_string(a) + "-" + to_string(b);
      }
      out += ']';
    }
  }
  for (const MDNode& c : n.children) out += ' ' + to_sexpr(c);
  out += ')';
  return out;
}

namespace detail {

class SexprParser {
 public:
  explicit SexprParser(std::string_view s) : s_(s) {}

  MDNode parse() {
    MDNode n = node();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input after tree", pos_);
    return n;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::uint32_t number() {
    skip();
    std::uint32_t value = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a vertex id", pos_);
    pos_ = static_cast<std::size_t>(p - s_.data());
    return value;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  MDNode node() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of tree", pos_);
    if (s_[pos_] != '(') return md_leaf(VertexId{number()});
    ++pos_;
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of tree", pos_);
    const char tag = s_[pos_++];
    NodeKind kind;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    if (tag == 'S' || tag == '1') {
      kind = NodeKind::Series;
    } else if (tag == 'P' || tag == '0') {
      kind = NodeKind::Parallel;
    } else if (tag == 'Q') {
      kind = NodeKind::Prime;
      expect('[');
      skip();
      while (pos_ < s_.size() && s_[pos_] != ']') {
        const auto a = number();
        expect('-');
        const auto b = number();
        edges.emplace_back(a, b);
        skip();
      }
      expect(']');
    } else {
      throw ParseError(std::string("unknown node tag '") + tag + "'", pos_ - 1);
    }
    std::vector<MDNode> kids;
    const std::size_t open = pos_;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) throw ParseError("unbalanced parenthesis", open);
      if (s_[pos_] == ')') {
        ++pos_;
        break;
      }
      kids.push_back(node());
    }
    Graph q;
    if (kind == NodeKind::Prime) {
      q = Graph::edgeless(kids.size());
      for (const auto& [a, b] : edges) {
        if (a >= kids.size() || b >= kids.size() || a == b) throw ParseError("bad quotient edge", open);
        q.set_edge_at(a, b, true);
      }
    }
    return md_node(kind, std::move(kids), std::move(q));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `(S ...)`, `(P ...)`, `(1 ...)`, `(0 ...)` and `(Q [a-b ...] ...)`.
/// Quotient indices refer to the children in the order written.
inline MDTree parse_sexpr(std::string_view text) { return detail::SexprParser(text).parse(); }

/// G plus a vertex adjacent to every vertex of G. Only defined for prime G.
inline Graph universal_vertex_gadget(const Graph& g) {
  if (!is_prime(g)) throw PreconditionFailed("universal_vertex_gadget requires a prime graph");
  Graph out = g;
  const VertexId x = g.fresh_label();
  const std::size_t ix = out.add_vertex(x);
  for (std::size_t i = 0; i < out.order(); ++i) {
    if (i != ix) out.set_edge_at(ix, i, true);
  }
  return out;
}

}  // namespace seidel
