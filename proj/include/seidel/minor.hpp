#pragma once

// Seidel minors: H ≤_S G when H arises from G by Seidel complements and
// vertex deletions, up to isomorphism.

#include <array>
#include <charconv>
#include <cstddef>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph6.hpp"
#include "seidel/seidel.hpp"

namespace seidel {

struct MinorStep {
  enum class Kind { Complement, Delete };
  Kind kind;
  VertexId vertex;

  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

struct MinorWitness {
  std::vector<MinorStep> steps;
  Isomorphism final_iso;  // remaining vertices of G -> vertices of H
};

/// Applies the steps to g (no isomorphism involved).
inline Graph apply_steps(Graph g, const std::vector<MinorStep>& steps) {
  for (const MinorStep& s : steps) {
    g = s.kind == MinorStep::Kind::Complement ? seidel_complement(g, s.vertex) : delete_vertex(g, s.vertex);
  }
  return g;
}

/// True iff the steps apply to g and final_iso maps the result onto h.
inline bool replay(const Graph& g, const Graph& h, const MinorWitness& w) {
  try {
    return w.final_iso.maps(apply_steps(g, w.steps), h);
  } catch (const InvalidVertex&) {
    return false;
  }
}

/// Concurrent map from canonical form to a value. Lookups and inserts are
/// linearizable per key; the first insert for a key wins.
template <typename V, std::size_t Shards = 32>
class ShardedMemo {
 public:
  std::optional<V> lookup(const CanonicalForm& k) const {
    const Shard& s = shard(k);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(k);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  /// Inserts unless present; returns the stored value.
  V insert(const CanonicalForm& k, V value) {
    Shard& s = shard(k);
    std::lock_guard lock(s.mu);
    return s.map.try_emplace(k, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
      std::lock_guard lock(s.mu);
      total += s.map.size();
    }
    return total;
  }

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<CanonicalForm, V, CanonicalFormHash> map;
  };

  Shard& shard(const CanonicalForm& k) { return shards_[CanonicalFormHash{}(k) % Shards]; }
  const Shard& shard(const CanonicalForm& k) const { return shards_[CanonicalFormHash{}(k) % Shards]; }

  std::array<Shard, Shards> shards_;
};

/// Reachability memo for one fixed target: state form -> contains target.
/// Safe to share across threads searching the same target.
class MinorMemo {
 public:
  explicit MinorMemo(const Graph& target)
      : target_form_(canonical_labeling(target).form), target_order_(target.order()) {}

  const CanonicalForm& target_form() const noexcept { return target_form_; }
  std::size_t target_order() const noexcept { return target_order_; }
  ShardedMemo<bool>& table() noexcept { return table_; }

 private:
  CanonicalForm target_form_;
  std::size_t target_order_;
  ShardedMemo<bool> table_;
};

namespace detail {

inline bool reaches(const Graph& s, MinorMemo& memo) {
  const auto cls = equivalence_class(s);
  for (const auto& m : cls.members) {
    if (auto hit = memo.table().lookup(m.form)) return *hit;
  }
  bool found = false;
  if (s.order() == memo.target_order()) {
    found = cls.find(memo.target_form()) != nullptr;
  } else {
    for (const auto& m : cls.members) {
      for (VertexId v : m.graph.vertices()) {
        if (reaches(delete_vertex(m.graph, v), memo)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  for (const auto& m : cls.members) memo.table().insert(m.form, found);
  return found;
}

}  // namespace detail

/// Decision-only search with a shared memo for the target.
inline bool has_seidel_minor(const Graph& g, MinorMemo& memo) {
  if (memo.target_order() > g.order()) return false;
  return detail::reaches(g, memo);
}

/// Searches for a witness of h ≤_S g. Levels are explored by descending
/// order; within a level every Seidel class is closed under complementation
/// before any deletion, and each isomorphism class is visited once.
inline std::optional<MinorWitness> is_seidel_minor(const Graph& h, const Graph& g) {
  if (h.order() == 0) throw PreconditionFailed("the target of a minor search needs at least one vertex");
  if (h.order() > g.order()) return std::nullopt;
  const auto target = canonical_labeling(h);

  struct State {
    Graph graph;
    std::vector<MinorStep> steps;
    CanonicalForm form;
  };
  std::vector<State> level;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  auto add_class = [&](std::vector<State>& into, Graph base, std::vector<MinorStep> steps) {
    CanonicalForm f = canonical_labeling(base).form;
    if (!seen.insert(f).second) return;
    into.push_back({base, steps, std::move(f)});
    for (VertexId u : base.vertices()) {
      Graph c = seidel_complement(base, u);
      CanonicalForm cf = canonical_labeling(c).form;
      if (!seen.insert(cf).second) continue;
      auto s = steps;
      s.push_back({MinorStep::Kind::Complement, u});
      into.push_back({std::move(c), std::move(s), std::move(cf)});
    }
  };
  add_class(level, g, {});

  for (std::size_t k = g.order();; --k) {
    if (k == h.order()) {
      for (const State& s : level) {
        if (s.form != target.form) continue;
        const auto lab = canonical_labeling(s.graph);
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(s.graph.label(lab.order[i]), h.label(target.order[i]));
        return MinorWitness{s.steps, Isomorphism(std::move(pairs))};
      }
      return std::nullopt;
    }
    std::vector<State> next;
    seen.clear();
    for (const State& s : level) {
      for (VertexId v : s.graph.vertices()) {
        auto steps = s.steps;
        steps.push_back({MinorStep::Kind::Delete, v});
        add_class(next, delete_vertex(s.graph, v), std::move(steps));
      }
    }
    level = std::move(next);
  }
}

/// Text form: optional `TARGET <graph6>` line, then `C v` / `D v` lines,
/// then one `ISO a->b c->d ...` line.
inline std::string write_witness(const MinorWitness& w, const Graph* target = nullptr) {
  std::ostringstream os;
  if (target != nullptr) os << "TARGET " << write_graph6(*target) << '\n';
  for (const MinorStep& s : w.steps) {
    os << (s.kind == MinorStep::Kind::Complement ? 'C' : 'D') << ' ' << s.vertex << '\n';
  }
  os << "ISO";
  for (const auto& [a, b] : w.final_iso.pairs()) os << ' ' << a << "->" << b;
  os << '\n';
  return os.str();
}

struct ParsedWitness {
  MinorWitness witness;
  std::optional<Graph> target;
};

inline ParsedWitness parse_witness(std::string_view text) {
  ParsedWitness out;
  bool have_iso = false;
  std::size_t pos = 0;
  auto parse_id = [&](std::string_view tok, std::size_t at) {
    std::uint32_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
      throw ParseError("expected a vertex id, got '" + std::string(tok) + "'", at);
    }
    return VertexId{value};
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // tokenise with offsets
    std::vector<std::pair<std::string_view, std::size_t>> toks;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t b = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > b) toks.emplace_back(line.substr(b, i - b), line_start + b);
    }
    if (toks.empty() || toks[0].first.front() == '#') continue;
    if (have_iso) throw ParseError("content after the ISO line", toks[0].second);
    const auto [head, at] = toks[0];
    if (head == "TARGET") {
      if (toks.size() != 2) throw ParseError("TARGET takes one graph6 token", at);
      try {
        out.target = parse_graph6(toks[1].first);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad TARGET graph6: ") + e.what(), toks[1].second + e.offset());
      }
    } else if (head == "C" || head == "D") {
      if (toks.size() != 2) throw ParseError("step takes exactly one vertex", at);
      out.witness.steps.push_back(
          {head == "C" ? MinorStep::Kind::Complement : MinorStep::Kind::Delete, parse_id(toks[1].first, toks[1].second)});
    } else if (head == "ISO") {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const auto [tok, tat] = toks[t];
        const auto arrow = tok.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected u->x", tat);
        pairs.emplace_back(parse_id(tok.substr(0, arrow), tat), parse_id(tok.substr(arrow + 2), tat + arrow + 2));
      }
      out.witness.final_iso = Isomorphism(std::move(pairs));
      have_iso = true;
    } else {
      throw ParseError("unknown witness line '" + std::string(head) + "'", at);
    }
  }
  if (!have_iso) throw ParseError("missing ISO line", text.size());
  return out;
}

}  // namespace seidel
