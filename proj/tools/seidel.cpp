// Command-line front end for the Seidel complementation library.
//
// Exit codes: 0 success (or "yes" for equiv/minor/replay), 1 a negative
// answer or a failed check, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "seidel/canonical.hpp"
#include "seidel/cograph.hpp"
#include "seidel/dot.hpp"
#include "seidel/graph6.hpp"
#include "seidel/io.hpp"
#include "seidel/minor.hpp"
#include "seidel/modular.hpp"
#include "seidel/obstructions.hpp"
#include "seidel/permutation.hpp"
#include "seidel/seidel.hpp"
#include "seidel/tournament.hpp"
#include "seidel/verify.hpp"

namespace {

using namespace seidel;

// A file path, "-" for stdin, or the graph text itself.
std::string load(const std::string& arg) {
  if (arg == "-" || std::filesystem::is_regular_file(arg)) return read_text_file(arg);
  return arg;
}

Graph load_graph(const std::string& arg, const std::string& format) {
  return read_graph(load(arg), parse_format_name(format));
}

VertexId parse_vertex(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("bad vertex id '" + s + "'", 0);
  return VertexId{static_cast<std::uint32_t>(v)};
}

void emit(const Graph& g, const std::string& how) {
  if (how == "dot") {
    std::cout << to_dot(g);
  } else if (how == "edges") {
    std::cout << write_edge_list(g);
  } else if (how == "g6" || how == "graph6") {
    std::cout << write_graph6(g) << '\n';
  } else {
    throw ParseError("unknown output format '" + how + "'", 0);
  }
}

unsigned worker_count() {
  if (const char* env = std::getenv("SEIDEL_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string word_text(const SeidelWord& w) { return w.empty() ? "()" : to_string(w); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel complementation: equivalence, minors, decomposition trees and verification"};
  app.require_subcommand(1);
  std::string in_format = "auto";

  // complement
  std::string graph_arg, vertex_arg, emit_format = "g6";
  auto* complement_cmd = app.add_subcommand("complement", "Seidel complement of a graph at one vertex");
  complement_cmd->add_option("graph", graph_arg, "graph file, '-' or literal graph6")->required();
  complement_cmd->add_option("--at", vertex_arg, "vertex id")->required();
  complement_cmd->add_option("--format", in_format, "input format: auto, g6, edges, diagram");
  complement_cmd->add_option("--emit", emit_format, "output format: g6, dot, edges");

  // class
  auto* class_cmd = app.add_subcommand("class", "list the Seidel equivalence class with words");
  class_cmd->add_option("graph", graph_arg, "graph")->required();
  class_cmd->add_option("--format", in_format, "input format");

  // equiv
  std::string second_arg;
  bool via_cograph = false, via_perm = false;
  auto* equiv_cmd = app.add_subcommand("equiv", "decide Seidel equivalence of two graphs");
  equiv_cmd->add_option("G", graph_arg, "first graph")->required();
  equiv_cmd->add_option("H", second_arg, "second graph")->required();
  equiv_cmd->add_option("--format", in_format, "input format");
  auto* cograph_flag = equiv_cmd->add_flag("--cograph", via_cograph, "linear co-tree test (cographs only)");
  equiv_cmd->add_flag("--perm", via_perm, "diagram test (permutation graphs only)")->excludes(cograph_flag);

  // minor
  auto* minor_cmd = app.add_subcommand("minor", "decide whether H is a Seidel minor of G");
  minor_cmd->add_option("H", graph_arg, "candidate minor")->required();
  minor_cmd->add_option("G", second_arg, "host graph")->required();
  minor_cmd->add_option("--format", in_format, "input format");

  // replay
  std::string witness_arg, target_arg;
  auto* replay_cmd = app.add_subcommand("replay", "check a minor witness independently");
  replay_cmd->add_option("G", graph_arg, "host graph")->required();
  replay_cmd->add_option("witness", witness_arg, "witness file")->required();
  replay_cmd->add_option("--target", target_arg, "target graph when the witness has no TARGET line");
  replay_cmd->add_option("--format", in_format, "input format");

  // recognize
  std::string via = "orientation";
  auto* recognize_cmd = app.add_subcommand("recognize", "permutation graph recognition");
  recognize_cmd->add_option("graph", graph_arg, "graph")->required();
  recognize_cmd->add_option("--via", via, "orientation, obstructions or both")
      ->check(CLI::IsMember({"orientation", "obstructions", "both"}));
  recognize_cmd->add_option("--format", in_format, "input format");

  // generate
  std::string family_arg;
  int param = -1;
  bool complemented = false;
  std::string out_format = "g6";
  auto* generate_cmd = app.add_subcommand("generate", "emit a named graph or family member");
  generate_cmd->add_option("family", family_arg, "C (hole), XF1..XF6, T2, X2, X3, X30..X34, X36")->required();
  generate_cmd->add_option("param", param, "family parameter");
  generate_cmd->add_flag("--complement", complemented, "emit the complement");
  generate_cmd->add_option("--format", out_format, "g6, dot or edges")->check(CLI::IsMember({"g6", "dot", "edges"}));

  // mdtree
  std::string transform_arg;
  auto* mdtree_cmd = app.add_subcommand("mdtree", "modular decomposition tree as an s-expression");
  mdtree_cmd->add_option("graph", graph_arg, "graph")->required();
  mdtree_cmd->add_option("--transform", transform_arg, "apply the Seidel tree transform at this vertex");
  mdtree_cmd->add_option("--format", in_format, "input format");

  // verify
  std::string suite;
  VerifyOptions vopts;
  std::string corpus_arg;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_names{"all"};
  for (const auto& [name, checks] : verify_suites()) suite_names.push_back(name);
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--max-n", vopts.max_n, "size bound (suite default when omitted)");
  verify_cmd->add_option("--samples", vopts.samples, "random sample count (suite default when omitted)");
  verify_cmd->add_option("--seed", vopts.seed, "random seed");
  verify_cmd->add_option("--corpus", corpus_arg, "graph6 file, one graph per line, for main-theorem");

  // tournament
  auto* tour_cmd = app.add_subcommand("tournament", "tournament operations (arc-list input)");
  tour_cmd->require_subcommand(1);
  auto* t_complement = tour_cmd->add_subcommand("complement", "Seidel complement of a tournament");
  t_complement->add_option("tournament", graph_arg, "arc-list file or '-'")->required();
  t_complement->add_option("--at", vertex_arg, "vertex id")->required();
  auto* t_prime = tour_cmd->add_subcommand("prime", "is the tournament prime");
  t_prime->add_option("tournament", graph_arg, "arc-list file or '-'")->required();
  auto* t_mdtree = tour_cmd->add_subcommand("mdtree", "decomposition tree of a tournament");
  t_mdtree->add_option("tournament", graph_arg, "arc-list file or '-'")->required();
  t_mdtree->add_option("--transform", transform_arg, "apply the tree transform at this vertex");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*complement_cmd) {
      emit(seidel_complement(load_graph(graph_arg, in_format), parse_vertex(vertex_arg)), emit_format);
      return 0;
    }
    if (*class_cmd) {
      const auto cls = equivalence_class(load_graph(graph_arg, in_format));
      for (const auto& m : cls.members) std::cout << word_text(m.word) << '\t' << write_graph6(m.graph) << '\n';
      std::cout << cls.size() << " non-isomorphic members\n";
      return 0;
    }
    if (*equiv_cmd) {
      const Graph g = load_graph(graph_arg, in_format), h = load_graph(second_arg, in_format);
      std::optional<SeidelWord> w;
      if (via_cograph) {
        w = cograph_seidel_equivalent(g, h);
      } else if (via_perm) {
        const auto rg = recognize(g), rh = recognize(h);
        if (!rg || !rh) throw PreconditionFailed("--perm needs two permutation graphs");
        PermEquivalenceStats st;
        w = perm_seidel_equivalent(*rg, *rh, &st);
        std::cerr << st.comparisons << " diagram comparisons (" << (st.used_diagram_codes ? "diagram codes" : "canonical forms")
                  << ")\n";
      } else {
        w = is_seidel_equivalent(g, h);
      }
      if (!w) {
        std::cout << "NOT EQUIVALENT\n";
        return 1;
      }
      std::cout << "EQUIVALENT " << word_text(*w) << '\n';
      return 0;
    }
    if (*minor_cmd) {
      const Graph h = load_graph(graph_arg, in_format), g = load_graph(second_arg, in_format);
      const auto w = is_seidel_minor(h, g);
      if (!w) {
        std::cout << "NOT-A-MINOR\n";
        return 1;
      }
      std::cout << write_witness(*w, &h);
      return 0;
    }
    if (*replay_cmd) {
      const Graph g = load_graph(graph_arg, in_format);
      const auto parsed = parse_witness(load(witness_arg));
      std::optional<Graph> target = parsed.target;
      if (!target_arg.empty()) target = load_graph(target_arg, in_format);
      if (!target) throw PreconditionFailed("the witness has no TARGET line; pass --target");
      const bool ok = replay(g, *target, parsed.witness);
      std::cout << (ok ? "VALID" : "INVALID") << '\n';
      return ok ? 0 : 1;
    }
    if (*recognize_cmd) {
      const Graph g = load_graph(graph_arg, in_format);
      std::optional<bool> by_orientation, by_obstructions;
      std::optional<PermRep> rep;
      if (via != "obstructions") {
        rep = recognize(g);
        by_orientation = rep.has_value();
      }
      if (via != "orientation") by_obstructions = is_permutation_by_obstructions(g);
      const bool answer = by_orientation ? *by_orientation : *by_obstructions;
      std::cout << (answer ? "PERMUTATION" : "NOT PERMUTATION");
      if (via == "both") std::cout << (*by_orientation == *by_obstructions ? " (agree)" : " (DISAGREE)");
      std::cout << '\n';
      if (rep) std::cout << write_diagram(*rep);
      return via == "both" && *by_orientation != *by_obstructions ? 1 : 0;
    }
    if (*generate_cmd) {
      const auto family = parse_family(family_arg);
      if (!family) throw ParseError("unknown family '" + family_arg + "'", 0);
      emit(make_family({*family, param, complemented}), out_format);
      return 0;
    }
    if (*mdtree_cmd) {
      const Graph g = load_graph(graph_arg, in_format);
      MDTree t = md_tree(g);
      if (!transform_arg.empty()) t = transform_md_tree(std::move(t), parse_vertex(transform_arg));
      std::cout << to_sexpr(t) << '\n';
      return 0;
    }
    if (*verify_cmd) {
      vopts.workers = worker_count();
      if (!corpus_arg.empty()) vopts.corpus = read_graph6_lines(read_text_file(corpus_arg));
      std::vector<std::string> checks;
      for (const auto& [name, list] : verify_suites()) {
        if (suite == "all" || suite == name) checks.insert(checks.end(), list.begin(), list.end());
      }
      bool all_ok = true;
      for (const auto& name : checks) {
        const VerifyResult r = run_check(name, vopts);
        all_ok = all_ok && r.passed;
        std::printf("%s %-20s %7zu checked %8.2fs", r.passed ? "PASS" : "FAIL", r.check.c_str(), r.checked, r.seconds);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
        if (r.counterexample) std::printf("  counterexample: %s\n", r.counterexample->c_str());
      }
      return all_ok ? 0 : 1;
    }
    if (*tour_cmd) {
      const Tournament t = parse_tournament(load(graph_arg));
      if (*t_complement) {
        std::cout << write_tournament(t_seidel_complement(t, parse_vertex(vertex_arg)));
      } else if (*t_prime) {
        std::cout << (t_is_prime(t) ? "PRIME" : "NOT PRIME") << '\n';
      } else {
        TNode tree = t_md_tree(t);
        if (!transform_arg.empty()) tree = t_transform_md_tree(std::move(tree), parse_vertex(transform_arg));
        std::cout << to_sexpr(tree) << '\n';
      }
      return 0;
    }
  } catch (const seidel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
