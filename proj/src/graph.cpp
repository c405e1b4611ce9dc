#include "graphsep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphsep {

namespace {

void check_dims(TripartiteDims d) {
  if (d.m < 1 || d.p < 1 || d.q < 1) {
    throw std::invalid_argument("tripartite dims must be positive");
  }
}

} // namespace

int vertex_index(VertexCoord c, TripartiteDims d) {
  check_dims(d);
  if (c.i < 1 || c.i > d.m || c.j < 1 || c.j > d.p || c.k < 1 || c.k > d.q) {
    throw std::out_of_range("vertex coordinate outside dims");
  }
  return (c.i - 1) * d.p * d.q + (c.j - 1) * d.q + c.k;
}

VertexCoord vertex_coord(int s, TripartiteDims d) {
  check_dims(d);
  if (s < 1 || s > d.order()) {
    throw std::out_of_range("flat vertex index outside 1..n");
  }
  const int z = s - 1;
  VertexCoord c;
  c.i = z / (d.p * d.q) + 1;
  c.j = (z / d.q) % d.p + 1;
  c.k = z % d.q + 1;
  return c;
}

Edge::Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

Graph::Graph(TripartiteDims dims) : dims_(dims) { check_dims(dims); }

Graph::Graph(TripartiteDims dims, const std::vector<Edge>& edges) : dims_(dims) {
  check_dims(dims);
  const int n = dims.order();
  for (const Edge& e : edges) {
    if (e.a == e.b) {
      throw std::invalid_argument("loop edge {" + std::to_string(e.a) + ", " +
                                  std::to_string(e.b) + "} not allowed");
    }
    if (e.a < 1 || e.b > n) {
      throw std::out_of_range("edge endpoint outside 1..n");
    }
    edges_.insert(e);
  }
}

int Graph::degree(int vertex) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.a == vertex) + (e.b == vertex);
  return d;
}

int Graph::degree_sum() const { return 2 * edge_count(); }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(vertex_count() + 1, 0); // 1-based
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

RatMatrix adjacency_matrix(const Graph& g) {
  RatMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) {
    m.at(e.a - 1, e.b - 1) = 1;
    m.at(e.b - 1, e.a - 1) = 1;
  }
  return m;
}

RatMatrix degree_matrix(const Graph& g) {
  RatMatrix m(g.vertex_count());
  const auto deg = g.degree_sequence();
  for (int v = 1; v <= g.vertex_count(); ++v) m.at(v - 1, v - 1) = deg[v];
  return m;
}

RatMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

Graph tensor_product(const Graph& g1, const Graph& g2, const Graph& g3) {
  const TripartiteDims dims{g1.vertex_count(), g2.vertex_count(), g3.vertex_count()};
  std::vector<Edge> edges;
  // Each factor-edge triple contributes the four sign combinations of the
  // Kronecker product.
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& e2 : g2.edges()) {
      for (const Edge& e3 : g3.edges()) {
        const auto idx = [&](int i, int j, int k) {
          return vertex_index({i, j, k}, dims);
        };
        edges.emplace_back(idx(e1.a, e2.a, e3.a), idx(e1.b, e2.b, e3.b));
        edges.emplace_back(idx(e1.a, e2.a, e3.b), idx(e1.b, e2.b, e3.a));
        edges.emplace_back(idx(e1.a, e2.b, e3.a), idx(e1.b, e2.a, e3.b));
        edges.emplace_back(idx(e1.a, e2.b, e3.b), idx(e1.b, e2.a, e3.a));
      }
    }
  }
  return Graph(dims, edges);
}

Graph complete_graph(int n) { return complete_graph(TripartiteDims{1, 1, n}); }

Graph complete_graph(TripartiteDims dims) {
  const int n = dims.order();
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return Graph(dims, edges);
}

Graph star_graph(int n) { return star_graph(TripartiteDims{1, 1, n}); }

Graph star_graph(TripartiteDims dims) {
  const int n = dims.order();
  if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
  std::vector<Edge> edges;
  for (int leaf = 2; leaf <= n; ++leaf) edges.emplace_back(1, leaf);
  return Graph(dims, edges);
}

EdgeClass classify_edge(const Edge& e, TripartiteDims d) {
  const VertexCoord u = vertex_coord(e.a, d);
  const VertexCoord v = vertex_coord(e.b, d);
  EdgeClass out;
  out.differs = {u.i != v.i, u.j != v.j, u.k != v.k};
  switch (out.differ_count()) {
    case 1: out.tag = EdgeClass::Tag::OneCoord; break;
    case 2: out.tag = EdgeClass::Tag::TwoCoord; break;
    default: out.tag = EdgeClass::Tag::ThreeCoord; break;
  }
  return out;
}

bool is_nearest_point_graph(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const VertexCoord u = vertex_coord(e.a, g.dims());
    const VertexCoord v = vertex_coord(e.b, g.dims());
    if (std::abs(u.i - v.i) > 1 || std::abs(u.j - v.j) > 1 || std::abs(u.k - v.k) > 1) {
      return false;
    }
  }
  return true;
}

Graph apply_vertex_permutation(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n + 1) {
    throw std::invalid_argument("permutation must have n+1 entries (1-based)");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    if (perm[v] < 1 || perm[v] > n || seen[perm[v]]) {
      throw std::invalid_argument("permutation is not a bijection on 1..n");
    }
    seen[perm[v]] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.a], perm[e.b]);
  return Graph(g.dims(), edges);
}

} // namespace graphsep
