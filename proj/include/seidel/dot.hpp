#pragma once

#include <sstream>
#include <string>

#include "seidel/graph.hpp"

namespace seidel {

/// Undirected DOT text. Vertices and edges appear in ascending label order.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v : g.vertices()) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace seidel
