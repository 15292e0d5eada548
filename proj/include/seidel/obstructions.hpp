#pragma once

// Named forbidden graphs for permutation graphs, the reduced Seidel-minor
// obstruction list, and the checks that tie them together.
//
// Path-based families share one layout: u_0 .. u_m is a path with m edges
// on labels 0..m, and the extra vertices follow in the order given below.
//
//   XF1^m  (m odd, m >= 3)   x dominates the path; a-u_0, b-u_m.
//                            labels: a, b, x.
//   XF2^m  (m >= 1)          XF1 layout plus a pendant c at x.
//                            labels: a, b, x, c.
//   XF3^m  (m >= 0)          adjacent C, D dominate the path; A-{C, u_0},
//                            B-{D, u_m}, E-{C, D}. labels: A, B, C, D, E.
//   XF4^m  (m >= 0)          C_{m+6} * v for a vertex v of the cycle.
//   XF5^m  (m >= 1)          non-adjacent C, D dominate the path;
//                            A-{D, u_0}, B-{C, u_m}. labels: A, B, C, D.
//   XF6^m  (m even, m >= 2)  XF5^m plus the edge CD.

#include <algorithm>
#include <cctype>
#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/graph.hpp"
#include "seidel/minor.hpp"
#include "seidel/permutation.hpp"
#include "seidel/seidel.hpp"

namespace seidel {

enum class Family { Hole, XF1, XF2, XF3, XF4, XF5, XF6, T2, X2, X3, X30, X31, X32, X33, X34, X36 };

struct FamilySpec {
  Family family;
  int param = -1;  // ignored for the finite graphs
  bool complemented = false;
};

inline bool is_finite_family(Family f) { return f >= Family::T2; }

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Hole: return "C";
    case Family::XF1: return "XF1";
    case Family::XF2: return "XF2";
    case Family::XF3: return "XF3";
    case Family::XF4: return "XF4";
    case Family::XF5: return "XF5";
    case Family::XF6: return "XF6";
    case Family::T2: return "T2";
    case Family::X2: return "X2";
    case Family::X3: return "X3";
    case Family::X30: return "X30";
    case Family::X31: return "X31";
    case Family::X32: return "X32";
    case Family::X33: return "X33";
    case Family::X34: return "X34";
    case Family::X36: return "X36";
  }
  return "?";
}

/// Accepts the names printed by family_name, case-insensitively, plus
/// "hole" for C.
inline std::optional<Family> parse_family(std::string name) {
  for (char& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (name == "HOLE") return Family::Hole;
  for (int i = 0; i <= static_cast<int>(Family::X36); ++i) {
    if (family_name(static_cast<Family>(i)) == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

inline std::string to_string(const FamilySpec& s) {
  std::string out = s.complemented ? "co-" : "";
  out += family_name(s.family);
  if (!is_finite_family(s.family)) out += "^" + std::to_string(s.param);
  if (s.family == Family::Hole) out = (s.complemented ? "co-C" : "C") + std::to_string(s.param);
  return out;
}

namespace detail {

inline Graph finite_graph(Family f) {
  switch (f) {
    case Family::T2:  // subdivided claw
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    case Family::X2:
      return Graph::from_edges(7, {{0, 6}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 6}, {4, 5}, {5, 6}});
    case Family::X3:
      return Graph::from_edges(7, {{0, 6}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
    case Family::X36:
      return Graph::from_edges(7, {{0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {4, 6}, {5, 6}});
    case Family::X30:
      return Graph::from_edges(7, {{0, 6}, {1, 5}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
    case Family::X31:
      return Graph::from_edges(7, {{0, 5}, {1, 4}, {1, 6}, {2, 3}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    case Family::X32:
      return Graph::from_edges(7, {{0, 6}, {1, 5}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {5, 6}});
    case Family::X33:
      return Graph::from_edges(7, {{0, 6}, {1, 4}, {1, 6}, {2, 3}, {2, 6}, {3, 5}, {4, 5}, {5, 6}});
    case Family::X34:
      return Graph::from_edges(7, {{0, 5}, {0, 6}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 5}, {5, 6}});
    default:
      throw PreconditionFailed("not a finite family");
  }
}

// Path on labels 0..m plus `extra` further isolated vertices.
inline Graph path_with_extras(int m, int extra) {
  Graph g = Graph::edgeless(static_cast<std::size_t>(m + 1 + extra));
  for (int i = 0; i < m; ++i) g.set_edge_at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1), true);
  return g;
}

inline void dominate(Graph& g, int m, std::size_t who) {
  for (int i = 0; i <= m; ++i) g.set_edge_at(who, static_cast<std::size_t>(i), true);
}

inline void check_param(bool ok, const FamilySpec& s, const char* range) {
  if (!ok) {
    throw PreconditionFailed(family_name(s.family) + " parameter " + std::to_string(s.param) + " out of range (" +
                             range + ")");
  }
}

}  // namespace detail

inline Graph make_family(const FamilySpec& spec) {
  const int m = spec.param;
  const auto u = [](int i) { return static_cast<std::size_t>(i); };
  Graph g;
  switch (spec.family) {
    case Family::Hole:
      detail::check_param(m >= 5, spec, "n >= 5");
      g = cycle_graph(u(m));
      break;
    case Family::XF1:
    case Family::XF2: {
      const bool xf2 = spec.family == Family::XF2;
      if (xf2) {
        detail::check_param(m >= 1, spec, "m >= 1");
      } else {
        detail::check_param(m >= 3 && m % 2 == 1, spec, "odd m >= 3");
      }
      g = detail::path_with_extras(m, xf2 ? 4 : 3);
      const std::size_t a = u(m + 1), b = u(m + 2), x = u(m + 3);
      detail::dominate(g, m, x);
      g.set_edge_at(a, 0, true);
      g.set_edge_at(b, u(m), true);
      if (xf2) g.set_edge_at(x, u(m + 4), true);
      break;
    }
    case Family::XF3: {
      detail::check_param(m >= 0, spec, "m >= 0");
      g = detail::path_with_extras(m, 5);
      const std::size_t A = u(m + 1), B = u(m + 2), C = u(m + 3), D = u(m + 4), E = u(m + 5);
      detail::dominate(g, m, C);
      detail::dominate(g, m, D);
      g.set_edge_at(C, D, true);
      g.set_edge_at(A, C, true);
      g.set_edge_at(A, 0, true);
      g.set_edge_at(B, D, true);
      g.set_edge_at(B, u(m), true);
      g.set_edge_at(E, C, true);
      g.set_edge_at(E, D, true);
      break;
    }
    case Family::XF4:
      detail::check_param(m >= 0, spec, "m >= 0");
      g = seidel_complement(cycle_graph(u(m + 6)), VertexId{0});
      break;
    case Family::XF5:
    case Family::XF6: {
      const bool xf6 = spec.family == Family::XF6;
      if (xf6) {
        detail::check_param(m >= 2 && m % 2 == 0, spec, "even m >= 2");
      } else {
        detail::check_param(m >= 1, spec, "m >= 1");
      }
      g = detail::path_with_extras(m, 4);
      const std::size_t A = u(m + 1), B = u(m + 2), C = u(m + 3), D = u(m + 4);
      detail::dominate(g, m, C);
      detail::dominate(g, m, D);
      g.set_edge_at(A, D, true);
      g.set_edge_at(A, 0, true);
      g.set_edge_at(B, C, true);
      g.set_edge_at(B, u(m), true);
      if (xf6) g.set_edge_at(C, D, true);
      break;
    }
    default:
      g = detail::finite_graph(spec.family);
  }
  return spec.complemented ? complement(g) : g;
}

/// Vertices A, B, C, D of XF5^m as laid out by make_family.
struct Xf5Roles {
  VertexId A, B, C, D;
  VertexId path(int i) const { return VertexId{static_cast<std::uint32_t>(i)}; }
};

inline Xf5Roles xf5_roles(int m) {
  const auto l = [](int i) { return VertexId{static_cast<std::uint32_t>(i)}; };
  return {l(m + 1), l(m + 2), l(m + 3), l(m + 4)};
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The reduced obstruction list, read literally: C5, C7, XF6^2, XF5^{2n+3}
/// (n >= 1), C_{2n} (n >= 6) and their complements; members with at most
/// max_n vertices, deduplicated up to isomorphism.
inline std::vector<NamedGraph> seidel_obstruction_set(std::size_t max_n) {
  if (max_n < 5) throw PreconditionFailed("the smallest obstruction has 5 vertices; max_n must be at least 5");
  std::vector<FamilySpec> specs{{Family::Hole, 5}, {Family::Hole, 7}, {Family::XF6, 2}};
  for (int m = 5; static_cast<std::size_t>(m + 5) <= max_n; m += 2) specs.push_back({Family::XF5, m});
  for (int n = 6; static_cast<std::size_t>(2 * n) <= max_n; ++n) specs.push_back({Family::Hole, 2 * n});
  std::vector<NamedGraph> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (FamilySpec s : specs) {
    for (bool co : {false, true}) {
      s.complemented = co;
      Graph g = make_family(s);
      if (g.order() > max_n) continue;
      if (seen.insert(canonical_labeling(g).form).second) out.push_back({to_string(s), std::move(g)});
    }
  }
  return out;
}

/// Reusable tester: one shared memo per obstruction, so it may be called
/// concurrently from several threads.
class ObstructionTester {
 public:
  explicit ObstructionTester(std::vector<NamedGraph> obstructions) : obstructions_(std::move(obstructions)) {
    for (const auto& o : obstructions_) memos_.push_back(std::make_unique<MinorMemo>(o.graph));
  }

  explicit ObstructionTester(std::size_t max_n) : ObstructionTester(seidel_obstruction_set(max_n)) {}

  const std::vector<NamedGraph>& obstructions() const noexcept { return obstructions_; }

  /// Name of the first obstruction that is a Seidel minor of g, if any.
  std::optional<std::string> find(const Graph& g) const {
    for (std::size_t i = 0; i < obstructions_.size(); ++i) {
      if (has_seidel_minor(g, *memos_[i])) return obstructions_[i].name;
    }
    return std::nullopt;
  }

  bool is_permutation(const Graph& g) const { return !find(g).has_value(); }

 private:
  std::vector<NamedGraph> obstructions_;
  std::vector<std::unique_ptr<MinorMemo>> memos_;
};

inline bool is_permutation_by_obstructions(const Graph& g) {
  if (g.order() < 5) return true;
  return ObstructionTester(g.order()).is_permutation(g);
}

/// Seidel classes of non-permutation graphs on n <= max_n vertices whose
/// proper Seidel minors are all permutation graphs: the obstruction set the
/// data actually requires. One representative per class, by order.
inline std::vector<Graph> computed_seidel_obstructions(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> done;
    for (const Graph& g : enumerate_graphs(n)) {
      if (is_permutation_graph(g)) continue;
      const auto cls = equivalence_class(g);
      if (done.count(cls.members.front().form)) continue;
      for (const auto& m : cls.members) done.insert(m.form);
      bool minimal = true;
      for (const auto& m : cls.members) {
        for (VertexId v : m.graph.vertices()) {
          if (!is_permutation_graph(delete_vertex(m.graph, v))) {
            minimal = false;
            break;
          }
        }
        if (!minimal) break;
      }
      if (minimal) out.push_back(g);
    }
  }
  return out;
}

// --- reduction propositions ---------------------------------------------

struct PropositionResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline PropositionResult check_equivalent_chain(const std::string& name, const std::vector<FamilySpec>& specs) {
  PropositionResult r{name, true, ""};
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    const Graph g = make_family(specs[i]);
    const Graph h = make_family(specs[i + 1]);
    const auto w = is_seidel_equivalent(g, h);
    const bool replayed = w && is_isomorphic(apply_word(g, *w), h).has_value();
    r.ok = r.ok && replayed;
    r.detail += to_string(specs[i]) + " *(" + (w ? seidel::to_string(*w) : std::string("none")) + ") ~ " +
                to_string(specs[i + 1]) + (replayed ? "" : " FAILED") + "; ";
  }
  return r;
}

inline PropositionResult check_minor(const std::string& name, const Graph& h, const std::string& h_name, const Graph& g) {
  PropositionResult r{name, false, ""};
  const auto w = is_seidel_minor(h, g);
  if (!w) {
    r.detail = "no witness for " + h_name;
    return r;
  }
  r.ok = replay(g, h, *w);
  std::string steps;
  for (const auto& s : w->steps) steps += (s.kind == MinorStep::Kind::Complement ? "C" : "D") + to_string(s.vertex) + " ";
  r.detail = h_name + " via [" + steps + "]" + (r.ok ? " replayed" : " REPLAY FAILED");
  return r;
}

inline PropositionResult check_hole_minor(const std::string& name, const Graph& g) {
  for (std::size_t k = 5; k <= g.order(); ++k) {
    auto r = check_minor(name, cycle_graph(k), "C" + std::to_string(k), g);
    if (r.ok) return r;
  }
  return {name, false, "no hole is a Seidel minor"};
}

}  // namespace detail

/// Runs every reduction proposition; `workers` threads share the work.
inline std::vector<PropositionResult> verify_reduction_propositions(unsigned workers = 1) {
  using Task = std::function<PropositionResult()>;
  std::vector<Task> tasks;
  tasks.push_back([] {
    return detail::check_equivalent_chain("X2 = X3 = X36", {{Family::X2}, {Family::X3}, {Family::X36}});
  });
  tasks.push_back([] {
    return detail::check_equivalent_chain("X30 = X32 = X33 = X34",
                                          {{Family::X30}, {Family::X32}, {Family::X33}, {Family::X34}});
  });
  tasks.push_back([] {
    return detail::check_minor("XF4^0 <= T2", make_family({Family::XF4, 0}), "XF4^0", make_family({Family::T2}));
  });
  tasks.push_back([] {
    return detail::check_minor("XF4^0 <= X31", make_family({Family::XF4, 0}), "XF4^0", make_family({Family::X31}));
  });
  tasks.push_back([] {
    auto r = detail::check_minor("C6 <= XF4^0", cycle_graph(6), "C6", make_family({Family::XF4, 0}));
    return r;
  });
  for (int n = 1; n <= 4; ++n) {
    tasks.push_back([n] {
      return detail::check_hole_minor("Hole <= XF2^" + std::to_string(n + 1), make_family({Family::XF2, n + 1}));
    });
    tasks.push_back(
        [n] { return detail::check_hole_minor("Hole <= XF3^" + std::to_string(n), make_family({Family::XF3, n})); });
    tasks.push_back(
        [n] { return detail::check_hole_minor("Hole <= XF4^" + std::to_string(n), make_family({Family::XF4, n})); });
  }
  for (int n = 1; n <= 3; ++n) {
    const std::string xf5 = "XF5^" + std::to_string(2 * n + 1);
    tasks.push_back([n, xf5] {
      return detail::check_minor(xf5 + " <= XF6^" + std::to_string(2 * n + 2), make_family({Family::XF5, 2 * n + 1}),
                                 xf5, make_family({Family::XF6, 2 * n + 2}));
    });
    tasks.push_back([n, xf5] {
      return detail::check_minor(xf5 + " <= XF1^" + std::to_string(2 * n + 3), make_family({Family::XF5, 2 * n + 1}),
                                 xf5, make_family({Family::XF1, 2 * n + 3}));
    });
    tasks.push_back([n, xf5] {
      return detail::check_minor(xf5 + " <= C" + std::to_string(2 * n + 7), make_family({Family::XF5, 2 * n + 1}), xf5,
                                 cycle_graph(static_cast<std::size_t>(2 * n + 7)));
    });
  }
  std::vector<PropositionResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, workers); ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace seidel
