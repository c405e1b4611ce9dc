#include "graphsep/transpose.hpp"

#include <stdexcept>

namespace graphsep {

Graph partial_transpose_graph(const Graph& g, Subsystem sub) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexCoord u = vertex_coord(e.a, g.dims());
    VertexCoord v = vertex_coord(e.b, g.dims());
    std::swap(u.coord(sub), v.coord(sub));
    const int a = vertex_index(u, g.dims());
    const int b = vertex_index(v, g.dims());
    // A swap of equal coordinates is the identity, so loops cannot appear.
    if (a == b) throw std::logic_error("partial transpose produced a loop");
    edges.emplace_back(a, b);
  }
  return Graph(g.dims(), edges);
}

DegreeReport degree_condition(const Graph& g) {
  DegreeReport report;
  const auto deg_g = g.degree_sequence();
  for (Subsystem sub : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    const auto deg_pt = partial_transpose_graph(g, sub).degree_sequence();
    auto& list = report.mismatches[static_cast<int>(sub)];
    for (int v = 1; v <= g.vertex_count(); ++v) {
      if (deg_g[v] != deg_pt[v]) {
        list.push_back({v, deg_g[v], deg_pt[v]});
      }
    }
    if (!list.empty()) report.holds = false;
  }
  return report;
}

} // namespace graphsep
