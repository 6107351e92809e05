#include <sstream>

#include "gammacrit/io.hpp"

namespace gammacrit {

std::string to_dot(const Graph& g, const DotOptions& opts) {
  std::ostringstream os;
  os << "graph " << opts.name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (v >= opts.first_subdivision_vertex) {
      os << " [shape=box, style=dashed, subdivision=true]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gammacrit
