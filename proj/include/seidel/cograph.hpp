#pragma once

// Co-trees of cographs and their constant-time Seidel update.
//
// A co-tree is stored unrooted (intrusive adjacency lists of half-edges)
// plus a root handle. Rooting is implicit, so reversing the path from P(v)
// to the root costs nothing: G*v moves leaf v next to the old root and
// makes P(v) the root.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/error.hpp"
#include "seidel/graph.hpp"
#include "seidel/modular.hpp"
#include "seidel/seidel.hpp"

namespace seidel {

class CoTree {
 public:
  enum class Kind : std::uint8_t { Parallel = 0, Series = 1, Leaf = 2 };
  static constexpr std::int32_t none = -1;

  CoTree() = default;

  /// Builds from a modular decomposition tree without prime nodes.
  explicit CoTree(const MDTree& t) {
    collect_leaves(t, labels_);
    std::sort(labels_.begin(), labels_.end());
    leaf_node_.assign(labels_.size(), 0);
    root_ = build(t);
  }

  std::size_t order() const noexcept { return labels_.size(); }
  std::span<const VertexId> vertices() const noexcept { return labels_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return root_; }
  Kind kind(std::size_t node) const { return nodes_[node].kind; }
  VertexId leaf_vertex(std::size_t node) const { return nodes_[node].vertex; }

  std::size_t leaf_of(VertexId v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw InvalidVertex("vertex " + to_string(v) + " is not a leaf of the co-tree");
    return leaf_node_[static_cast<std::size_t>(it - labels_.begin())];
  }

  /// Neighbours of a node in the unrooted tree.
  std::vector<std::size_t> neighbors(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::int32_t h = nodes_[node].first; h != none; h = halves_[h].next) {
      out.push_back(halves_[static_cast<std::size_t>(h ^ 1)].node);
    }
    return out;
  }

  /// Children of a node under the current root.
  std::vector<std::size_t> children(std::size_t node) const {
    std::vector<std::size_t> out;
    const auto p = parent(node);
    for (std::size_t x : neighbors(node)) {
      if (!p || x != *p) out.push_back(x);
    }
    return out;
  }

  /// Parent under the current root (walks from the root; not O(1)).
  std::optional<std::size_t> parent(std::size_t node) const {
    std::vector<std::int64_t> par(nodes_.size(), -2);
    std::vector<std::size_t> stack{root_};
    par[root_] = -1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (x == node) break;
      for (std::size_t y : neighbors(x)) {
        if (par[y] == -2) {
          par[y] = static_cast<std::int64_t>(x);
          stack.push_back(y);
        }
      }
    }
    if (par[node] < 0) return std::nullopt;
    return static_cast<std::size_t>(par[node]);
  }

  /// Seidel complement at v in place. Returns the number of handle writes.
  std::size_t seidel(VertexId v) {
    const std::size_t x = leaf_of(v);
    if (x == root_) return 0;
    const std::size_t t = static_cast<std::size_t>(nodes_[x].first ^ 1);
    const std::size_t parent = halves_[t].node;
    if (parent == root_) return 0;
    std::size_t writes = unlink(t);
    writes += link(t, root_);
    root_ = parent;
    return writes + 1;
  }

  /// Rooted view as a modular decomposition tree.
  MDTree to_md_tree() const { return to_md(root_, std::nullopt); }

  /// Total handle writes performed by `seidel` so far.
  std::size_t mutations() const noexcept { return mutations_; }

  std::size_t seidel_counted(VertexId v) {
    const std::size_t w = seidel(v);
    mutations_ += w;
    return w;
  }

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    VertexId vertex{};
    std::int32_t first = none;
  };
  struct Half {
    std::size_t node = 0;
    std::int32_t prev = none, next = none;
  };

  std::size_t build(const MDNode& n) {
    const std::size_t id = nodes_.size();
    nodes_.push_back({});
    if (n.is_leaf()) {
      nodes_[id].vertex = n.vertex;
      leaf_node_[static_cast<std::size_t>(std::lower_bound(labels_.begin(), labels_.end(), n.vertex) - labels_.begin())] = id;
      return id;
    }
    if (n.kind == NodeKind::Prime) throw PreconditionFailed("a co-tree has no prime nodes");
    nodes_[id].kind = n.kind == NodeKind::Series ? Kind::Series : Kind::Parallel;
    nodes_[id].vertex = n.vertex;
    for (const MDNode& c : n.children) {
      const std::size_t child = build(c);
      const std::size_t h = halves_.size();
      halves_.push_back({});
      halves_.push_back({});
      link(h, id);
      link(h + 1, child);
    }
    return id;
  }

  std::size_t unlink(std::size_t h) {
    Half& e = halves_[h];
    std::size_t writes = 0;
    if (e.prev != none) {
      halves_[static_cast<std::size_t>(e.prev)].next = e.next;
    } else {
      nodes_[e.node].first = e.next;
    }
    ++writes;
    if (e.next != none) {
      halves_[static_cast<std::size_t>(e.next)].prev = e.prev;
      ++writes;
    }
    return writes;
  }

  std::size_t link(std::size_t h, std::size_t node) {
    Half& e = halves_[h];
    e.node = node;
    e.prev = none;
    e.next = nodes_[node].first;
    std::size_t writes = 3;
    if (e.next != none) {
      halves_[static_cast<std::size_t>(e.next)].prev = static_cast<std::int32_t>(h);
      ++writes;
    }
    nodes_[node].first = static_cast<std::int32_t>(h);
    return writes + 1;
  }

  MDNode to_md(std::size_t x, std::optional<std::size_t> from) const {
    if (nodes_[x].kind == Kind::Leaf) return md_leaf(nodes_[x].vertex);
    std::vector<MDNode> kids;
    for (std::size_t y : neighbors(x)) {
      if (!from || y != *from) kids.push_back(to_md(y, x));
    }
    return md_node(nodes_[x].kind == Kind::Series ? NodeKind::Series : NodeKind::Parallel, std::move(kids));
  }

  std::vector<Node> nodes_;
  std::vector<Half> halves_;
  std::vector<VertexId> labels_;
  std::vector<std::size_t> leaf_node_;
  std::size_t root_ = 0;
  std::size_t mutations_ = 0;
};

inline bool is_cograph(const Graph& g) {
  if (g.order() == 0) return true;
  auto no_prime = [](auto&& self, const MDNode& n) -> bool {
    if (n.kind == NodeKind::Prime) return false;
    return std::all_of(n.children.begin(), n.children.end(), [&](const MDNode& c) { return self(self, c); });
  };
  return no_prime(no_prime, md_tree(g));
}

/// The co-tree of g, or nothing when g has an induced P4.
inline std::optional<CoTree> cotree(const Graph& g) {
  if (g.order() == 0 || !is_cograph(g)) return std::nullopt;
  return CoTree(md_tree(g));
}

inline Graph realize(const CoTree& t) { return realize(t.to_md_tree()); }

inline CoTree cotree_seidel(CoTree t, VertexId v) {
  t.seidel(v);
  return t;
}

/// `(1 ...)` for series and `(0 ...)` for parallel nodes.
inline std::string to_sexpr(const CoTree& t) {
  std::string s = to_sexpr(t.to_md_tree());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(' && (s[i + 1] == 'S' || s[i + 1] == 'P')) s[i + 1] = s[i + 1] == 'S' ? '1' : '0';
  }
  return s;
}

// --- equivalence -----------------------------------------------------------

struct AhuStats {
  std::size_t node_visits = 0;
};

namespace detail {

// Unrooted co-tree plus one dummy leaf hanging off the root. Leaves of G*f
// give the same shape with f and the dummy swapped, so a whole Seidel class
// shares one unlabelled shape and differs only in which leaf is the dummy.
struct MarkedTree {
  std::vector<CoTree::Kind> kind;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<VertexId> vertex;  // leaf labels; the dummy has none
  std::size_t dummy = 0;
};

inline MarkedTree marked_tree(const CoTree& t) {
  MarkedTree m;
  const std::size_t n = t.node_count();
  m.kind.resize(n + 1);
  m.adj.resize(n + 1);
  m.vertex.resize(n + 1);
  for (std::size_t x = 0; x < n; ++x) {
    m.kind[x] = t.kind(x);
    m.vertex[x] = t.leaf_vertex(x);
    m.adj[x] = t.neighbors(x);
  }
  m.dummy = n;
  m.kind[n] = CoTree::Kind::Leaf;
  m.adj[n].push_back(t.root());
  m.adj[t.root()].push_back(n);
  return m;
}

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t node_hash(CoTree::Kind k, std::uint64_t child_sum) {
  return mix(child_sum + 0x51ed270b27a3f1c5ULL * (static_cast<std::uint64_t>(k) + 1));
}

// Hash of the tree rooted at every leaf, by rerooting: two passes, each
// visiting every node once.
inline std::vector<std::uint64_t> leaf_rooted_hashes(const MarkedTree& m, AhuStats& st) {
  const std::size_t n = m.adj.size();
  std::vector<std::size_t> order, par(n, n);
  order.reserve(n);
  std::vector<std::size_t> stack{m.dummy};
  par[m.dummy] = m.dummy;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    ++st.node_visits;
    order.push_back(x);
    for (std::size_t y : m.adj[x]) {
      if (par[y] == n) {
        par[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::uint64_t> down(n), sum(n, 0), up(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    down[x] = node_hash(m.kind[x], sum[x]);
    if (x != m.dummy) sum[par[x]] += mix(down[x]);
  }
  // up[x]: hash of par[x]'s side, rooted at par[x], without x.
  std::vector<std::uint64_t> rooted(n, 0);
  for (std::size_t x : order) {
    ++st.node_visits;
    const std::uint64_t above = x == m.dummy ? 0 : mix(up[x]);
    for (std::size_t y : m.adj[x]) {
      if (y == par[x] && x != m.dummy) continue;
      up[y] = node_hash(m.kind[x], sum[x] - mix(down[y]) + above);
    }
    if (m.kind[x] == CoTree::Kind::Leaf) {
      const std::uint64_t rest = x == m.dummy ? sum[x] : above + sum[x];
      rooted[x] = mix(rest ^ 0x2545f4914f6cdd1dULL);
    }
  }
  return rooted;
}

// Exact AHU code of the marked tree rooted at leaf r.
inline std::string ahu_string(const MarkedTree& m, std::size_t r, AhuStats& st) {
  auto code = [&](auto&& self, std::size_t x, std::size_t from) -> std::string {
    ++st.node_visits;
    std::vector<std::string> kids;
    for (std::size_t y : m.adj[x]) {
      if (y != from) kids.push_back(self(self, y, x));
    }
    std::sort(kids.begin(), kids.end());
    std::string out(1, m.kind[x] == CoTree::Kind::Leaf ? 'L' : (m.kind[x] == CoTree::Kind::Series ? 'S' : 'P'));
    if (kids.empty()) return out;
    out += '(';
    for (const auto& k : kids) out += k;
    out += ')';
    return out;
  };
  return code(code, r, m.adj.size());
}

}  // namespace detail

/// AHU code of a co-tree under its current root: equal codes iff the rooted
/// labelled trees are isomorphic.
inline std::string ahu_canonical(const CoTree& t, AhuStats* stats = nullptr) {
  AhuStats local;
  const auto m = detail::marked_tree(t);
  return detail::ahu_string(m, m.dummy, stats ? *stats : local);
}

/// A word ω with G*ω ≅ H for cographs G, H, or nothing. The empty word when
/// G ≅ H, otherwise the smallest single pivot.
inline std::optional<SeidelWord> cograph_seidel_equivalent(const Graph& g, const Graph& h, AhuStats* stats = nullptr) {
  AhuStats local;
  AhuStats& st = stats ? *stats : local;
  st = {};
  const auto tg = cotree(g), th = cotree(h);
  if ((g.order() > 0 && !tg) || (h.order() > 0 && !th)) {
    throw PreconditionFailed("cograph_seidel_equivalent needs two cographs");
  }
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() <= 1) return SeidelWord{};

  const auto mg = detail::marked_tree(*tg);
  const auto mh = detail::marked_tree(*th);
  const auto hg = detail::leaf_rooted_hashes(mg, st);
  const auto hh = detail::leaf_rooted_hashes(mh, st);
  const std::uint64_t want = hh[mh.dummy];
  std::optional<std::string> target;
  auto matches = [&](std::size_t leaf) {
    if (hg[leaf] != want) return false;
    if (!target) target = detail::ahu_string(mh, mh.dummy, st);
    return detail::ahu_string(mg, leaf, st) == *target;
  };
  if (matches(mg.dummy)) return SeidelWord{};
  for (VertexId v : g.vertices()) {
    if (matches(tg->leaf_of(v))) return SeidelWord{v};
  }
  return std::nullopt;
}

/// All cographs on n vertices up to isomorphism, sorted by canonical form.
inline std::vector<Graph> enumerate_cographs(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::vector<Graph>> all(n + 1), connected(n + 1);
  all[1] = connected[1] = {Graph::edgeless(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<std::pair<CanonicalForm, Graph>> disconnected;
    for (std::size_t a = 1; a < k; ++a) {
      for (const Graph& x : connected[a]) {
        for (const Graph& y : all[k - a]) {
          Graph u = disjoint_union(x, y);
          auto form = canonical_labeling(u).form;
          if (seen.insert(form).second) disconnected.emplace_back(std::move(form), std::move(u));
        }
      }
    }
    std::vector<std::pair<CanonicalForm, Graph>> both = disconnected;
    for (const auto& [form, u] : disconnected) {
      Graph c = complement(u);
      both.emplace_back(canonical_labeling(c).form, c);
      connected[k].push_back(std::move(c));
    }
    std::sort(both.begin(), both.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [form, u] : both) all[k].push_back(canonical_graph(u));
  }
  return all[n];
}

}  // namespace seidel
