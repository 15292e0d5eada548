#pragma once

// Reading and writing graphs: graph6, the plain edge list, and permutation
// diagrams, with format auto-detection.

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/error.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph6.hpp"
#include "seidel/permutation.hpp"

namespace seidel {

enum class GraphFormat { Auto, Graph6, EdgeList, Diagram };

inline GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "diagram" || name == "perm") return GraphFormat::Diagram;
  throw ParseError("unknown format '" + std::string(name) + "'", 0);
}

/// `n m`, then one `u v` line per edge. Vertices are written by position,
/// so the output is 0-indexed whatever the labels are.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (g.adjacent_at(a, b)) os << a << ' ' << b << '\n';
    }
  }
  return os.str();
}

namespace detail {

struct Token {
  std::size_t offset;
  std::size_t line;
  std::uint64_t value;
};

// Unsigned integers with their offsets and line numbers; '#' starts a comment.
inline std::vector<Token> integer_tokens(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 0;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc{}) throw ParseError("expected a non-negative integer", i);
      out.push_back({i, line, v});
      i = static_cast<std::size_t>(p - text.data());
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        throw ParseError("unexpected character", i);
      }
    }
  }
  return out;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  const auto tok = detail::integer_tokens(text);
  if (tok.size() < 2) throw ParseError("edge list needs a header line `n m`", tok.empty() ? 0 : tok[0].offset);
  const std::uint64_t n = tok[0].value, m = tok[1].value;
  if (n > Graph::max_order) throw ParseError("more than 64 vertices", tok[0].offset);
  if (tok.size() != 2 + 2 * m) {
    throw ParseError("header announces " + std::to_string(m) + " edges", tok.size() > 2 + 2 * m ? tok[2 + 2 * m].offset : text.size());
  }
  Graph g = Graph::edgeless(static_cast<std::size_t>(n));
  for (std::size_t k = 2; k < tok.size(); k += 2) {
    const auto u = tok[k], v = tok[k + 1];
    if (u.value >= n) throw ParseError("vertex out of range", u.offset);
    if (v.value >= n) throw ParseError("vertex out of range", v.offset);
    if (u.value == v.value) throw ParseError("self-loop", u.offset);
    g.set_edge_at(static_cast<std::size_t>(u.value), static_cast<std::size_t>(v.value), true);
  }
  return g;
}

/// Picks graph6 for a single token, the edge list when the first line is a
/// well-formed header, and a diagram for two lines that are not an edge list.
inline GraphFormat detect_format(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view body = text.substr(b, e - b);
  if (body.starts_with(">>graph6<<")) return GraphFormat::Graph6;
  if (body.find_first_of(" \t\r\n") == std::string_view::npos && !body.empty()) {
    const bool digits = std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits) return GraphFormat::Graph6;
  }
  try {
    (void)parse_edge_list(text);
    return GraphFormat::EdgeList;
  } catch (const ParseError&) {
  }
  try {
    (void)parse_diagram(text);
    return GraphFormat::Diagram;
  } catch (const ParseError&) {
  }
  return GraphFormat::EdgeList;  // report the edge-list error
}

inline Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) format = detect_format(text);
  switch (format) {
    case GraphFormat::Graph6: {
      std::size_t b = 0, e = text.size();
      while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
      return parse_graph6(text.substr(b, e - b));
    }
    case GraphFormat::Diagram:
      return realize(parse_diagram(text));
    default:
      return parse_edge_list(text);
  }
}

inline std::string read_text_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// One graph6 string per non-empty line, '#' lines skipped.
inline std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + e.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace seidel
