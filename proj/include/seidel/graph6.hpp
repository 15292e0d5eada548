#pragma once

// graph6 encoding for graphs with at most 62 vertices (one-byte size form).

#include <cstddef>
#include <string>
#include <string_view>

#include "seidel/error.hpp"
#include "seidel/graph.hpp"

namespace seidel {

inline constexpr std::size_t graph6_max_order = 62;

/// Encodes g using its dense vertex order. Labels are not recorded.
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) {
    throw LimitExceeded("graph6 writer supports at most 62 vertices, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent_at(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Parses one graph6 token (an optional ">>graph6<<" header is accepted).
/// The result has labels 0..n-1.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, header.size()) == header) base = header.size();
  const std::string_view body = text.substr(base);
  if (body.empty()) throw ParseError("empty graph6 token", base);
  for (std::size_t k = 0; k < body.size(); ++k) {
    const auto c = static_cast<unsigned char>(body[k]);
    if (c < 63 || c > 126) throw ParseError("character outside the graph6 range", base + k);
  }
  const auto first = static_cast<std::size_t>(static_cast<unsigned char>(body[0]) - 63);
  if (first > graph6_max_order) {
    throw ParseError("multi-byte graph6 size form is not supported (n > 62)", base);
  }
  const std::size_t n = first;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() < 1 + bytes) throw ParseError("graph6 token is truncated", base + body.size());
  if (body.size() > 1 + bytes) throw ParseError("trailing data after graph6 token", base + 1 + bytes);
  Graph g = Graph::edgeless(n);
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++pos) {
      const int byte = static_cast<unsigned char>(body[1 + pos / 6]) - 63;
      if ((byte >> (5 - pos % 6)) & 1) g.set_edge_at(i, j, true);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(body[bytes]) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 token", base + bytes);
    }
  }
  return g;
}

}  // namespace seidel
