#pragma once

// Permutation diagrams. A diagram is a pair of orders (σ1, σ2) of the same
// vertex set; u and v are adjacent iff the two orders disagree on them.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"
#include "seidel/modular.hpp"
#include "seidel/seidel.hpp"

namespace seidel {

/// Doubly linked order over slots 0..n-1 with O(1) splicing.
class LinkedOrder {
 public:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  LinkedOrder() = default;

  explicit LinkedOrder(const std::vector<std::size_t>& order) : prev_(order.size()), next_(order.size()) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      prev_[order[k]] = k == 0 ? none : order[k - 1];
      next_[order[k]] = k + 1 == order.size() ? none : order[k + 1];
    }
    head_ = order.empty() ? none : order.front();
    tail_ = order.empty() ? none : order.back();
  }

  std::size_t head() const noexcept { return head_; }
  std::size_t tail() const noexcept { return tail_; }
  std::size_t next(std::size_t s) const { return next_[s]; }
  std::size_t prev(std::size_t s) const { return prev_[s]; }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t s = head_; s != none; s = next_[s]) out.push_back(s);
    return out;
  }

  /// A·s·B becomes B·s·A. Returns the number of link fields written.
  std::size_t exchange_around(std::size_t s) {
    const std::size_t a_first = head_ == s ? none : head_;
    const std::size_t a_last = prev_[s];
    const std::size_t b_first = next_[s];
    const std::size_t b_last = tail_ == s ? none : tail_;
    std::size_t writes = 0;
    auto set = [&writes](std::size_t& field, std::size_t value) {
      field = value;
      ++writes;
    };
    if (b_first != none) {
      set(head_, b_first);
      set(prev_[b_first], none);
      set(next_[b_last], s);
      set(prev_[s], b_last);
    } else {
      set(head_, s);
      set(prev_[s], none);
    }
    if (a_first != none) {
      set(next_[s], a_first);
      set(prev_[a_first], s);
      set(next_[a_last], none);
      set(tail_, a_last);
    } else {
      set(next_[s], none);
      set(tail_, s);
    }
    return writes;
  }

  friend bool operator==(const LinkedOrder&, const LinkedOrder&) = default;

 private:
  std::vector<std::size_t> prev_, next_;
  std::size_t head_ = none, tail_ = none;
};

/// A permutation diagram over a labelled vertex set.
class PermRep {
 public:
  PermRep() = default;

  PermRep(const std::vector<VertexId>& sigma1, const std::vector<VertexId>& sigma2) : labels_(sigma1) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw InvalidVertex("a diagram sequence repeats a vertex");
    }
    auto other = sigma2;
    std::sort(other.begin(), other.end());
    if (other != labels_) throw InvalidVertex("the two diagram sequences are over different vertex sets");
    first_ = LinkedOrder(slots(sigma1));
    second_ = LinkedOrder(slots(sigma2));
  }

  std::size_t order() const noexcept { return labels_.size(); }
  std::span<const VertexId> vertices() const noexcept { return labels_; }

  std::vector<VertexId> sigma1() const { return labels(first_); }
  std::vector<VertexId> sigma2() const { return labels(second_); }

  /// Operation S at v on both sequences. Returns the link writes performed.
  std::size_t apply_s(VertexId v) {
    const std::size_t s = slot(v);
    return first_.exchange_around(s) + second_.exchange_around(s);
  }

  /// Position of each slot in σ1 and σ2.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> positions() const {
    std::vector<std::size_t> p1(order()), p2(order());
    std::size_t k = 0;
    for (std::size_t s = first_.head(); s != LinkedOrder::none; s = first_.next(s)) p1[s] = k++;
    k = 0;
    for (std::size_t s = second_.head(); s != LinkedOrder::none; s = second_.next(s)) p2[s] = k++;
    return {p1, p2};
  }

  std::size_t slot(VertexId v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw InvalidVertex("vertex " + to_string(v) + " is not in the diagram");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  VertexId label(std::size_t s) const { return labels_[s]; }

  friend bool operator==(const PermRep&, const PermRep&) = default;

 private:
  std::vector<std::size_t> slots(const std::vector<VertexId>& seq) const {
    std::vector<std::size_t> out;
    for (VertexId v : seq) out.push_back(slot(v));
    return out;
  }

  std::vector<VertexId> labels(const LinkedOrder& o) const {
    std::vector<VertexId> out;
    for (std::size_t s : o.to_vector()) out.push_back(labels_[s]);
    return out;
  }

  std::vector<VertexId> labels_;
  LinkedOrder first_, second_;
};

/// The permutation graph of the diagram.
inline Graph realize(const PermRep& r) {
  Graph g(std::vector<VertexId>(r.vertices().begin(), r.vertices().end()));
  const auto [p1, p2] = r.positions();
  for (std::size_t a = 0; a < r.order(); ++a) {
    for (std::size_t b = a + 1; b < r.order(); ++b) {
      if ((p1[a] < p1[b]) != (p2[a] < p2[b])) g.set_edge_at(a, b, true);
    }
  }
  return g;
}

/// Operation S on a copy.
inline PermRep op_s(PermRep r, VertexId v) {
  r.apply_s(v);
  return r;
}

// --- recognition ---------------------------------------------------------

/// Transitive orientation as out-neighbour rows, or nothing when g is not
/// a comparability graph. Implication classes are peeled off one at a time
/// (the G-decomposition); each class is forced inside the edges that remain.
inline std::optional<std::vector<Row>> transitive_orientation(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Row> remaining(g.rows().begin(), g.rows().end());
  std::vector<Row> out(n, 0);
  for (;;) {
    std::size_t a0 = n, b0 = n;
    for (std::size_t i = 0; i < n && a0 == n; ++i) {
      if (remaining[i] != 0) {
        a0 = i;
        b0 = static_cast<std::size_t>(std::countr_zero(remaining[i]));
      }
    }
    if (a0 == n) break;
    // Implication class of the arc (a0, b0) in the remaining graph.
    std::vector<Row> cls(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{a0, b0}};
    cls[a0] |= detail::bit(b0);
    while (!stack.empty()) {
      const auto [a, b] = stack.back();
      stack.pop_back();
      // (a,b) forces (a,c) when b and c are distinct and non-adjacent.
      detail::for_each_bit(remaining[a] & ~remaining[b] & ~detail::bit(b), [&](std::size_t c) {
        if (!(cls[a] & detail::bit(c))) {
          cls[a] |= detail::bit(c);
          stack.emplace_back(a, c);
        }
      });
      // (a,b) forces (c,b) when a and c are distinct and non-adjacent.
      detail::for_each_bit(remaining[b] & ~remaining[a] & ~detail::bit(a), [&](std::size_t c) {
        if (!(cls[c] & detail::bit(b))) {
          cls[c] |= detail::bit(b);
          stack.emplace_back(c, b);
        }
      });
    }
    for (std::size_t i = 0; i < n; ++i) {
      bool clash = false;
      detail::for_each_bit(cls[i], [&](std::size_t j) { clash = clash || (cls[j] & detail::bit(i)); });
      if (clash) return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
      out[i] |= cls[i];
      detail::for_each_bit(cls[i], [&](std::size_t j) {
        remaining[i] &= ~detail::bit(j);
        remaining[j] &= ~detail::bit(i);
      });
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    detail::for_each_bit(out[i], [&](std::size_t j) { ok = ok && (out[j] & ~out[i]) == 0; });
    if (!ok) return std::nullopt;
  }
  return out;
}

namespace detail {

// Orders the vertices by number of predecessors in a transitive tournament.
inline std::optional<std::vector<std::size_t>> linear_order(const std::vector<Row>& arcs) {
  const std::size_t n = arcs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<int> outdeg(n);
  for (std::size_t i = 0; i < n; ++i) outdeg[i] = std::popcount(arcs[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return outdeg[a] > outdeg[b]; });
  for (std::size_t k = 0; k < n; ++k) {
    if (static_cast<std::size_t>(outdeg[order[k]]) != n - 1 - k) return std::nullopt;
  }
  return order;
}

}  // namespace detail

/// A diagram whose permutation graph is exactly g, or nothing.
inline std::optional<PermRep> recognize(const Graph& g) {
  const auto f = transitive_orientation(g);
  if (!f) return std::nullopt;
  const auto fc = transitive_orientation(complement(g));
  if (!fc) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<Row> up(n), down(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = (*f)[i] | (*fc)[i];
    detail::for_each_bit((*f)[i], [&](std::size_t j) { down[j] |= detail::bit(i); });
    down[i] |= (*fc)[i];
  }
  const auto o1 = detail::linear_order(up);
  const auto o2 = detail::linear_order(down);
  if (!o1 || !o2) throw Error("recognize: orientations of a graph and its complement did not combine");
  std::vector<VertexId> s1, s2;
  for (std::size_t i : *o1) s1.push_back(g.label(i));
  for (std::size_t i : *o2) s2.push_back(g.label(i));
  PermRep r(s1, s2);
  if (realize(r) != g) throw Error("recognize: extracted diagram does not realize the input");
  return r;
}

inline bool is_permutation_graph(const Graph& g) { return recognize(g).has_value(); }

// --- comparison ----------------------------------------------------------

/// Label-free code of a diagram: for the k-th element of σ1, its position
/// in σ2; minimised over reversing both orders and swapping them.
using DiagramCode = std::vector<std::size_t>;

namespace detail {

inline DiagramCode raw_code(const PermRep& r) {
  const auto [p1, p2] = r.positions();
  DiagramCode pi(r.order());
  for (std::size_t s = 0; s < r.order(); ++s) pi[p1[s]] = p2[s];
  return pi;
}

inline DiagramCode min_symmetric(const DiagramCode& pi) {
  const std::size_t n = pi.size();
  DiagramCode inv(n), rev(n), rev_inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[pi[i]] = i;
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - pi[n - 1 - i];
  for (std::size_t i = 0; i < n; ++i) rev_inv[i] = n - 1 - inv[n - 1 - i];
  return std::min({pi, inv, rev, rev_inv});
}

}  // namespace detail

/// Canonical code of the diagram of a prime permutation graph. Prime
/// permutation graphs have a single diagram up to the four symmetries, so
/// equal codes mean isomorphic graphs.
inline DiagramCode canonical_diagram(const PermRep& r) {
  if (!is_prime(realize(r))) {
    throw PreconditionFailed("canonical_diagram needs a prime graph; compare non-prime graphs by isomorphism");
  }
  return detail::min_symmetric(detail::raw_code(r));
}

struct PermEquivalenceStats {
  std::size_t comparisons = 0;
  bool used_diagram_codes = false;
};

/// A word ω with G(r1)*ω ≅ G(r2), or nothing. Tries the empty word and each
/// single vertex, applying S to r1 in place and undoing it.
inline std::optional<SeidelWord> perm_seidel_equivalent(const PermRep& r1, const PermRep& r2,
                                                        PermEquivalenceStats* stats = nullptr) {
  PermEquivalenceStats local;
  PermEquivalenceStats& st = stats ? *stats : local;
  st = {};
  if (r1.order() != r2.order()) return std::nullopt;
  const bool prime = is_prime(realize(r2));
  st.used_diagram_codes = prime;
  PermRep work = r1;
  std::optional<DiagramCode> target_code;
  std::optional<CanonicalForm> target_form;
  if (prime) {
    target_code = detail::min_symmetric(detail::raw_code(r2));
  } else {
    target_form = canonical_labeling(realize(r2)).form;
  }
  auto same = [&]() {
    ++st.comparisons;
    if (prime) return detail::min_symmetric(detail::raw_code(work)) == *target_code;
    return canonical_labeling(realize(work)).form == *target_form;
  };
  if (same()) return SeidelWord{};
  for (VertexId v : r1.vertices()) {
    work.apply_s(v);
    const bool hit = same();
    work.apply_s(v);
    if (hit) return SeidelWord{v};
  }
  return std::nullopt;
}

// --- text ----------------------------------------------------------------

inline std::string write_diagram(const PermRep& r) {
  std::ostringstream os;
  auto line = [&](const std::vector<VertexId>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i];
    os << '\n';
  };
  line(r.sigma1());
  line(r.sigma2());
  return os.str();
}

/// Two lines, each a whitespace-separated permutation of vertex ids.
inline PermRep parse_diagram(std::string_view text) {
  std::vector<std::vector<VertexId>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::vector<VertexId> seq;
    bool any = false;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;
      std::uint32_t value = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc{}) throw ParseError("expected a vertex id in diagram", pos + i);
      i = static_cast<std::size_t>(p - line.data());
      if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
        throw ParseError("unexpected character in diagram", pos + i);
      }
      seq.push_back(VertexId{value});
      any = true;
    }
    if (any) lines.push_back(std::move(seq));
    if (lines.size() > 2) throw ParseError("a diagram has exactly two lines", pos);
    pos = end + 1;
  }
  if (lines.size() != 2) throw ParseError("a diagram has exactly two lines", text.size());
  try {
    return PermRep(lines[0], lines[1]);
  } catch (const InvalidVertex& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace seidel
