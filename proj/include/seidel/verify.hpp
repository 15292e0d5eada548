#pragma once

// Executable checks of the calculus: each walks a graph stream (exhaustive
// or seeded random), fans out over worker threads and reports the first
// counterexample as graph6.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/cograph.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/graph6.hpp"
#include "seidel/modular.hpp"
#include "seidel/obstructions.hpp"
#include "seidel/permutation.hpp"
#include "seidel/seidel.hpp"
#include "seidel/tournament.hpp"

namespace seidel {

struct VerifyOptions {
  std::size_t max_n = 0;    // 0: the check's default
  std::size_t samples = 0;  // 0: the check's default
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::vector<Graph> corpus;  // extra graphs for main-theorem
};

struct VerifyResult {
  std::string check;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
  std::optional<std::string> counterexample;  // graph6
  double seconds = 0;
};

namespace verify_detail {

struct Failure {
  std::string message;
  std::string graph6;
};

using Item = std::function<std::optional<Failure>(std::size_t)>;

// Runs item(0..count-1) on `workers` threads, counts failures and keeps the
// one with the smallest index, so reports do not depend on scheduling.
inline VerifyResult run_items(const std::string& name, std::size_t count, unsigned workers, const Item& item) {
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<std::pair<std::size_t, Failure>> first;
  std::size_t failures = 0;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (auto f = item(i)) {
        std::lock_guard lock(mu);
        ++failures;
        if (!first || i < first->first) first.emplace(i, std::move(*f));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, workers); ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  VerifyResult r;
  r.check = name;
  r.checked = count;
  r.failures = failures;
  if (first) {
    r.passed = false;
    r.detail = first->second.message;
    r.counterexample = first->second.graph6;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.1 + 0.8 * unit(rng);
  Graph g = Graph::edgeless(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (unit(rng) < p) g.set_edge_at(a, b, true);
    }
  }
  return g;
}

inline std::mt19937_64 item_rng(std::uint64_t seed, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i)};
  return std::mt19937_64(seq);
}

inline Graph sample_graph(const VerifyOptions& o, std::size_t max_n, std::size_t i) {
  auto rng = item_rng(o.seed, i);
  const std::size_t n = 1 + rng() % max_n;
  return random_graph(n, rng);
}

inline std::vector<Graph> all_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::size_t pick(std::size_t given, std::size_t fallback) { return given ? given : fallback; }

inline std::string at(const Graph& g, std::initializer_list<VertexId> vs) {
  std::string s = write_graph6(g) + " at";
  for (VertexId v : vs) s += " " + to_string(v);
  return s;
}

inline Failure fail(const Graph& g, std::string message) { return {std::move(message), write_graph6(g)}; }

}  // namespace verify_detail

/// (G*v)*v = G on random graphs.
inline VerifyResult verify_involution(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 10);
  return verify_detail::run_items("involution", verify_detail::pick(o.samples, 1000), o.workers,
                                  [&](std::size_t i) -> std::optional<verify_detail::Failure> {
                                    const Graph g = verify_detail::sample_graph(o, max_n, i);
                                    for (VertexId v : g.vertices()) {
                                      if (seidel_complement(seidel_complement(g, v), v) != g) {
                                        return verify_detail::fail(g, "(G*v)*v != G: " + verify_detail::at(g, {v}));
                                      }
                                    }
                                    return std::nullopt;
                                  });
}

/// G*v*w*v = G*w*v*w = G with v and w swapped, and G*v*w ≅ G*w.
inline VerifyResult verify_pivot(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 10);
  return verify_detail::run_items(
      "pivot", verify_detail::pick(o.samples, 1000), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const Graph g = verify_detail::sample_graph(o, max_n, i);
        for (VertexId v : g.vertices()) {
          const Graph gv = seidel_complement(g, v);
          for (VertexId w : g.vertices()) {
            if (v == w) continue;
            const Graph gvw = seidel_complement(gv, w);
            const Graph a = seidel_complement(gvw, v);
            const Graph b = seidel_complement(seidel_complement(seidel_complement(g, w), v), w);
            if (a != b || a != swap_labels(g, v, w)) {
              return verify_detail::fail(g, "pivot identity fails: " + verify_detail::at(g, {v, w}));
            }
            if (!is_isomorphic(gvw, seidel_complement(g, w))) {
              return verify_detail::fail(g, "G*v*w not isomorphic to G*w: " + verify_detail::at(g, {v, w}));
            }
          }
        }
        return std::nullopt;
      });
}

/// |class(G)| <= n+1 over all graphs.
inline VerifyResult verify_class_size(const VerifyOptions& o) {
  const auto graphs = verify_detail::all_graphs(verify_detail::pick(o.max_n, 7));
  return verify_detail::run_items("class-size", graphs.size(), o.workers,
                                  [&](std::size_t i) -> std::optional<verify_detail::Failure> {
                                    const Graph& g = graphs[i];
                                    const auto size = equivalence_class(g).size();
                                    if (size > g.order() + 1) {
                                      return verify_detail::fail(g, "class has " + std::to_string(size) + " members");
                                    }
                                    return std::nullopt;
                                  });
}

/// is_prime(G) = is_prime(G*v) over all graphs.
inline VerifyResult verify_prime(const VerifyOptions& o) {
  const auto graphs = verify_detail::all_graphs(verify_detail::pick(o.max_n, 7));
  return verify_detail::run_items("prime", graphs.size(), o.workers,
                                  [&](std::size_t i) -> std::optional<verify_detail::Failure> {
                                    const Graph& g = graphs[i];
                                    const bool p = is_prime(g);
                                    for (VertexId v : g.vertices()) {
                                      if (is_prime(seidel_complement(g, v)) != p) {
                                        return verify_detail::fail(g, "primality changes: " + verify_detail::at(g, {v}));
                                      }
                                    }
                                    return std::nullopt;
                                  });
}

/// Every module avoiding v stays a module of G*v (random graphs).
inline VerifyResult verify_modules(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 8);
  return verify_detail::run_items(
      "modules", verify_detail::pick(o.samples, 200), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const Graph g = verify_detail::sample_graph(o, max_n, i);
        std::vector<Row> mods;
        for (Row m = 1; m <= g.all(); ++m) {
          if (is_module(g, m)) mods.push_back(m);
        }
        for (std::size_t k = 0; k < g.order(); ++k) {
          const Graph h = seidel_complement(g, g.label(k));
          for (Row m : mods) {
            if (!((m >> k) & 1U) && !is_module(h, m)) {
              return verify_detail::fail(g, "module " + std::to_string(m) + " lost: " + verify_detail::at(g, {g.label(k)}));
            }
          }
        }
        return std::nullopt;
      });
}

/// Handle writes allowed per co-tree update.
inline constexpr std::size_t cotree_write_bound = 8;

/// Over all cographs: G*v is a cograph and the co-tree update commutes with
/// realize, within a constant number of handle writes.
inline VerifyResult verify_cograph(const VerifyOptions& o) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= verify_detail::pick(o.max_n, 8); ++n) {
    auto level = enumerate_cographs(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  std::atomic<std::size_t> max_writes{0};
  auto r = verify_detail::run_items(
      "cograph", graphs.size(), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const Graph& g = graphs[i];
        const CoTree t = *cotree(g);
        for (VertexId v : g.vertices()) {
          const Graph gv = seidel_complement(g, v);
          if (!is_cograph(gv)) return verify_detail::fail(g, "G*v is not a cograph: " + verify_detail::at(g, {v}));
          CoTree s = t;
          const std::size_t w = s.seidel(v);
          std::size_t seen = max_writes.load();
          while (w > seen && !max_writes.compare_exchange_weak(seen, w)) {
          }
          if (w > cotree_write_bound) {
            return verify_detail::fail(g, std::to_string(w) + " handle writes: " + verify_detail::at(g, {v}));
          }
          if (realize(s) != gv) return verify_detail::fail(g, "co-tree update disagrees: " + verify_detail::at(g, {v}));
          s.seidel(v);
          if (realize(s) != g) return verify_detail::fail(g, "co-tree update not self-inverse: " + verify_detail::at(g, {v}));
        }
        return std::nullopt;
      });
  r.detail = (r.passed ? "" : r.detail + "; ") + "max handle writes per update " + std::to_string(max_writes.load()) +
             " (bound " + std::to_string(cotree_write_bound) + ")";
  return r;
}

/// The linear cograph test agrees with the generic one on all pairs, in a
/// linear number of tree-node visits.
inline VerifyResult verify_cograph_equivalence(const VerifyOptions& o) {
  std::vector<std::pair<Graph, Graph>> pairs;
  for (std::size_t n = 1; n <= verify_detail::pick(o.max_n, 6); ++n) {
    const auto level = enumerate_cographs(n);
    for (const Graph& g : level) {
      for (const Graph& h : level) pairs.emplace_back(g, h);
    }
  }
  std::atomic<std::size_t> worst{0};  // visits per vertex, times 100
  auto r = verify_detail::run_items(
      "cograph-equivalence", pairs.size(), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const auto& [g, h] = pairs[i];
        AhuStats st;
        const auto w = cograph_seidel_equivalent(g, h, &st);
        const auto generic = is_seidel_equivalent(g, h);
        const std::size_t ratio = 100 * st.node_visits / (g.order() + 1);
        std::size_t seen = worst.load();
        while (ratio > seen && !worst.compare_exchange_weak(seen, ratio)) {
        }
        if (w.has_value() != generic.has_value()) {
          return verify_detail::fail(g, "disagrees with the generic test against " + write_graph6(h));
        }
        if (w && !is_isomorphic(apply_word(g, *w), h)) {
          return verify_detail::fail(g, "word does not replay against " + write_graph6(h));
        }
        if (st.node_visits > 16 * (g.order() + 1)) {
          return verify_detail::fail(g, std::to_string(st.node_visits) + " node visits against " + write_graph6(h));
        }
        return std::nullopt;
      });
  std::ostringstream os;
  os << (r.passed ? "" : r.detail + "; ") << "max node visits per vertex " << worst.load() / 100.0 << " (bound 16)";
  r.detail = os.str();
  return r;
}

/// transform_md_tree(md_tree(G), v) = md_tree(G*v) over all graphs.
inline VerifyResult verify_mdtree(const VerifyOptions& o) {
  const auto graphs = verify_detail::all_graphs(verify_detail::pick(o.max_n, 7));
  return verify_detail::run_items("mdtree", graphs.size(), o.workers,
                                  [&](std::size_t i) -> std::optional<verify_detail::Failure> {
                                    const Graph& g = graphs[i];
                                    const MDTree t = md_tree(g);
                                    for (VertexId v : g.vertices()) {
                                      if (transform_md_tree(t, v) != md_tree(seidel_complement(g, v))) {
                                        return verify_detail::fail(g, "tree transform differs: " + verify_detail::at(g, {v}));
                                      }
                                    }
                                    return std::nullopt;
                                  });
}

namespace verify_detail {

inline PermRep random_rep(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> a;
  for (std::uint32_t i = 0; i < n; ++i) a.push_back(VertexId{i});
  auto b = a;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  return PermRep(a, b);
}

}  // namespace verify_detail

/// Link writes allowed for operation S on a whole diagram.
inline constexpr std::size_t diagram_write_bound = 16;

/// realize(S(R, v)) = realize(R)*v on random diagrams, constant splices.
inline VerifyResult verify_diagram(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 10);
  std::atomic<std::size_t> max_writes{0};
  auto r = verify_detail::run_items(
      "diagram", verify_detail::pick(o.samples, 500), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        auto rng = verify_detail::item_rng(o.seed, i);
        const PermRep rep = verify_detail::random_rep(1 + rng() % max_n, rng);
        const Graph g = realize(rep);
        for (VertexId v : rep.vertices()) {
          PermRep s = rep;
          const std::size_t w = s.apply_s(v);
          std::size_t seen = max_writes.load();
          while (w > seen && !max_writes.compare_exchange_weak(seen, w)) {
          }
          if (w > diagram_write_bound) return verify_detail::fail(g, std::to_string(w) + " link writes at " + to_string(v));
          if (realize(s) != seidel_complement(g, v)) {
            return verify_detail::fail(g, "diagram " + write_diagram(rep) + "disagrees at " + to_string(v));
          }
        }
        return std::nullopt;
      });
  r.detail = (r.passed ? "" : r.detail + "; ") + "max link writes per operation " + std::to_string(max_writes.load()) +
             " (bound " + std::to_string(diagram_write_bound) + ")";
  return r;
}

/// The diagram-based test agrees with the generic one using at most n+1
/// comparisons. Half of the pairs are related by operation S.
inline VerifyResult verify_perm_equivalence(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 8);
  return verify_detail::run_items(
      "perm-equivalence", verify_detail::pick(o.samples, 200), o.workers,
      [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        auto rng = verify_detail::item_rng(o.seed, i);
        const std::size_t n = 1 + rng() % max_n;
        const PermRep a = verify_detail::random_rep(n, rng);
        PermRep b = verify_detail::random_rep(n, rng);
        if (i % 2 == 0) b = op_s(a, VertexId{static_cast<std::uint32_t>(rng() % n)});
        PermEquivalenceStats st;
        const auto w = perm_seidel_equivalent(a, b, &st);
        const auto generic = is_seidel_equivalent(realize(a), realize(b));
        const Graph g = realize(a);
        if (w.has_value() != generic.has_value()) {
          return verify_detail::fail(g, "disagrees with the generic test against " + write_graph6(realize(b)));
        }
        if (w && !is_isomorphic(apply_word(g, *w), realize(b))) return verify_detail::fail(g, "word does not replay");
        if (st.comparisons > n + 1) return verify_detail::fail(g, std::to_string(st.comparisons) + " comparisons");
        return std::nullopt;
      });
}

namespace verify_detail {

inline std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (VertexId v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

inline std::string show(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

// Explicit isomorphisms G*x -> G of XF5^n for x = D, A and the first path
// vertex; path vertex i (1-based) has label i-1.
inline std::vector<std::pair<std::string, std::map<VertexId, VertexId>>> xf5_witnesses(int n) {
  const auto r = xf5_roles(n);
  const auto p = [](int i) { return VertexId{static_cast<std::uint32_t>(i - 1)}; };
  std::map<VertexId, VertexId> at_d{{r.A, p(1)}, {r.B, r.D}, {r.C, r.A}, {r.D, r.C}, {p(n + 1), r.B}};
  for (int i = 1; i <= n; ++i) at_d[p(i)] = p(i + 1);
  std::map<VertexId, VertexId> at_a{{r.A, r.A}, {r.C, r.C}, {p(1), r.D}, {p(2), r.B}, {r.D, p(1)}, {r.B, p(2)}};
  for (int i = 3; i <= n + 1; ++i) at_a[p(i)] = p(n + 4 - i);
  std::map<VertexId, VertexId> at_1{{p(3), r.A}, {r.B, p(n - 1)}, {r.D, p(n)}, {p(1), p(n + 1)},
                                    {r.C, r.B},  {r.A, r.D},      {p(2), r.C}};
  for (int i = 4; i <= n + 1; ++i) at_1[p(i)] = p(i - 3);
  return {{"D", at_d}, {"A", at_a}, {"1", at_1}};
}

}  // namespace verify_detail

/// Degree multiset of XF5^n from its construction: [2, 2, 4 x (n+1), n+2, n+2].
inline std::vector<std::size_t> xf5_degree_sequence(int n) {
  std::vector<std::size_t> d{2, 2};
  d.insert(d.end(), static_cast<std::size_t>(n + 1), 4);
  d.push_back(static_cast<std::size_t>(n + 2));
  d.push_back(static_cast<std::size_t>(n + 2));
  std::sort(d.begin(), d.end());
  return d;
}

/// XF5^n is Seidel stable (with explicit witnesses for n >= 3) and has the
/// expected degree multiset, n = 1..max_n.
inline VerifyResult verify_xf5(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 8);
  return verify_detail::run_items(
      "xf5", max_n, o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const int n = static_cast<int>(i) + 1;
        const Graph g = make_family({Family::XF5, n});
        if (!is_seidel_stable(g)) return verify_detail::fail(g, "XF5^" + std::to_string(n) + " is not Seidel stable");
        const auto d = verify_detail::sorted_degrees(g);
        if (d != xf5_degree_sequence(n)) {
          return verify_detail::fail(g, "XF5^" + std::to_string(n) + " degrees " + verify_detail::show(d));
        }
        if (n >= 3) {
          for (const auto& [name, table] : verify_detail::xf5_witnesses(n)) {
            const Isomorphism iso(std::vector<std::pair<VertexId, VertexId>>(table.begin(), table.end()));
            if (!iso.maps(seidel_complement(g, name == "D" ? xf5_roles(n).D : name == "A" ? xf5_roles(n).A : VertexId{0}), g)) {
              return verify_detail::fail(g, "witness for G*" + name + " fails at n=" + std::to_string(n));
            }
          }
        }
        return std::nullopt;
      });
}

/// For 1 <= k < l <= 4: XF5^{2k} is a Seidel-stable permutation graph and
/// not an induced subgraph of XF5^{2l}.
inline VerifyResult verify_antichain(const VerifyOptions& o) {
  const int top = static_cast<int>(verify_detail::pick(o.max_n, 4));
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= top; ++k) {
    for (int l = k + 1; l <= top; ++l) pairs.emplace_back(k, l);
  }
  return verify_detail::run_items(
      "antichain", pairs.size(), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const auto [k, l] = pairs[i];
        const Graph a = make_family({Family::XF5, 2 * k});
        const Graph b = make_family({Family::XF5, 2 * l});
        if (!recognize(a)) return verify_detail::fail(a, "XF5^" + std::to_string(2 * k) + " not recognized");
        if (!is_seidel_stable(a)) return verify_detail::fail(a, "XF5^" + std::to_string(2 * k) + " not stable");
        if (contains_induced(b, a)) {
          return verify_detail::fail(a, "XF5^" + std::to_string(2 * k) + " is induced in XF5^" + std::to_string(2 * l));
        }
        return std::nullopt;
      });
}

/// The class of C_n is exactly {C_n, XF4^{n-6}}, n = 7..max_n.
inline VerifyResult verify_holes(const VerifyOptions& o) {
  const std::size_t top = verify_detail::pick(o.max_n, 12);
  return verify_detail::run_items(
      "holes", top >= 7 ? top - 6 : 0, o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const int n = static_cast<int>(i) + 7;
        const Graph c = cycle_graph(static_cast<std::size_t>(n));
        const auto cls = equivalence_class(c);
        const bool ok = cls.size() == 2 && cls.find(canonical_labeling(c).form) &&
                        cls.find(canonical_labeling(make_family({Family::XF4, n - 6})).form);
        if (!ok) return verify_detail::fail(c, "class of C" + std::to_string(n) + " has " + std::to_string(cls.size()) + " members");
        return std::nullopt;
      });
}

inline VerifyResult verify_propositions(const VerifyOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult r;
  r.check = "propositions";
  const auto results = verify_reduction_propositions(std::max(1U, o.workers));
  r.checked = results.size();
  std::size_t ok = 0;
  for (const auto& p : results) {
    if (p.ok) {
      ++ok;
    } else if (r.passed) {
      r.passed = false;
      r.detail = p.name + ": " + p.detail;
    }
  }
  if (r.passed) r.detail = std::to_string(ok) + " witnesses replayed";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// recognize(G) succeeds iff no listed obstruction is a Seidel minor of G,
/// over all graphs with n <= max_n and the corpus. The detail line also
/// reports how many disagreements the computed minimal classes remove.
inline VerifyResult verify_main_theorem(const VerifyOptions& o) {
  const std::size_t max_n = verify_detail::pick(o.max_n, 7);
  auto graphs = verify_detail::all_graphs(max_n);
  graphs.insert(graphs.end(), o.corpus.begin(), o.corpus.end());
  std::size_t top = max_n;
  for (const Graph& g : o.corpus) top = std::max(top, g.order());
  std::map<std::size_t, std::unique_ptr<ObstructionTester>> testers;
  for (std::size_t n = 5; n <= top; ++n) testers[n] = std::make_unique<ObstructionTester>(n);
  std::mutex mu;
  std::map<std::string, std::size_t> by_kind;
  auto r = verify_detail::run_items(
      "main-theorem", graphs.size(), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const Graph& g = graphs[i];
        const bool by_orientation = recognize(g).has_value();
        const bool by_obstructions = g.order() < 5 || testers.at(g.order())->is_permutation(g);
        if (by_orientation == by_obstructions) return std::nullopt;
        {
          std::lock_guard lock(mu);
          ++by_kind[by_orientation ? "obstruction found in a permutation graph" : "non-permutation graph with no listed obstruction"];
        }
        return verify_detail::fail(g, std::string("recognize ") + (by_orientation ? "succeeds" : "fails") +
                                          " but the obstruction test says " + (by_obstructions ? "permutation" : "not permutation"));
      });
  std::ostringstream os;
  if (!r.passed) os << r.detail << "; ";
  os << r.failures << " disagreements over " << graphs.size() << " graphs";
  for (const auto& [kind, count] : by_kind) os << "; " << count << " x " << kind;
  std::vector<std::string> names;
  for (const auto& ob : seidel_obstruction_set(std::max<std::size_t>(5, max_n))) names.push_back(ob.name);
  os << "; obstruction list {";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << "}";
  // Same comparison against the Seidel-minimal classes found by search.
  if (max_n <= max_exhaustive_order) {
    std::vector<NamedGraph> computed;
    for (const Graph& g : computed_seidel_obstructions(max_n)) computed.push_back({write_graph6(g), g});
    const ObstructionTester tester(computed);
    std::size_t left = 0;
    for (const Graph& g : verify_detail::all_graphs(max_n)) left += recognize(g).has_value() != tester.is_permutation(g);
    os << "; with the " << computed.size() << " computed minimal classes {";
    for (std::size_t i = 0; i < computed.size(); ++i) os << (i ? ", " : "") << computed[i].name;
    os << "}: " << left << " disagreements";
  }
  r.detail = os.str();
  return r;
}

/// Involution and prime preservation over all tournaments up to max_n, and
/// the decomposition tree transform against recomputation.
inline VerifyResult verify_tournament(const VerifyOptions& o) {
  std::vector<Tournament> all;
  for (std::size_t n = 1; n <= verify_detail::pick(o.max_n, 6); ++n) {
    auto level = enumerate_tournaments(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  auto r = verify_detail::run_items(
      "tournament", all.size(), o.workers, [&](std::size_t i) -> std::optional<verify_detail::Failure> {
        const Tournament& t = all[i];
        const bool p = t_is_prime(t);
        const TNode tree = t_md_tree(t);
        for (VertexId v : t.vertices()) {
          const Tournament s = t_seidel_complement(t, v);
          std::string where = write_tournament(t) + "at " + to_string(v);
          std::replace(where.begin(), where.end(), '\n', ' ');
          if (t_seidel_complement(s, v) != t) return verify_detail::Failure{"involution fails", where};
          if (t_is_prime(s) != p) return verify_detail::Failure{"primality changes", where};
          if (t_transform_md_tree(tree, v) != t_md_tree(s)) return verify_detail::Failure{"tree transform differs", where};
        }
        return std::nullopt;
      });
  return r;
}

/// Suite names accepted by the command line, with the checks each runs.
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& verify_suites() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> suites{
      {"involution", {"involution"}},
      {"pivot", {"pivot", "class-size"}},
      {"prime", {"prime"}},
      {"cograph", {"cograph", "cograph-equivalence"}},
      {"mdtree", {"mdtree", "modules"}},
      {"diagram", {"diagram", "perm-equivalence"}},
      {"xf5", {"xf5", "antichain"}},
      {"holes", {"holes"}},
      {"propositions", {"propositions"}},
      {"main-theorem", {"main-theorem"}},
      {"tournament", {"tournament"}},
  };
  return suites;
}

inline VerifyResult run_check(const std::string& name, const VerifyOptions& o) {
  static const std::map<std::string, VerifyResult (*)(const VerifyOptions&)> checks{
      {"involution", verify_involution},
      {"pivot", verify_pivot},
      {"class-size", verify_class_size},
      {"prime", verify_prime},
      {"modules", verify_modules},
      {"cograph", verify_cograph},
      {"cograph-equivalence", verify_cograph_equivalence},
      {"mdtree", verify_mdtree},
      {"diagram", verify_diagram},
      {"perm-equivalence", verify_perm_equivalence},
      {"xf5", verify_xf5},
      {"antichain", verify_antichain},
      {"holes", verify_holes},
      {"propositions", verify_propositions},
      {"main-theorem", verify_main_theorem},
      {"tournament", verify_tournament},
  };
  const auto it = checks.find(name);
  if (it == checks.end()) throw PreconditionFailed("unknown check '" + name + "'");
  return it->second(o);
}

}  // namespace seidel
