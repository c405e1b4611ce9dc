#ifndef GRAPHSEP_GRAPH_HPP
#define GRAPHSEP_GRAPH_HPP

#include "graphsep/rat_matrix.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace graphsep {

enum class Subsystem { A, B, C };

constexpr const char* subsystem_name(Subsystem s) {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    default: return "C";
  }
}

/// Subsystem dimensions of the tripartite space C^m (x) C^p (x) C^q.
struct TripartiteDims {
  int m = 1;
  int p = 1;
  int q = 1;

  int order() const { return m * p * q; }
  int dim(Subsystem s) const {
    switch (s) {
      case Subsystem::A: return m;
      case Subsystem::B: return p;
      default: return q;
    }
  }
  bool operator==(const TripartiteDims&) const = default;
};

/// 1-based coordinates (i, j, k) of a vertex on the m x p x q grid.
struct VertexCoord {
  int i = 1;
  int j = 1;
  int k = 1;

  int coord(Subsystem s) const {
    switch (s) {
      case Subsystem::A: return i;
      case Subsystem::B: return j;
      default: return k;
    }
  }
  int& coord(Subsystem s) {
    switch (s) {
      case Subsystem::A: return i;
      case Subsystem::B: return j;
      default: return k;
    }
  }
  bool operator==(const VertexCoord&) const = default;
};

/// Flat index s = (i-1)pq + (j-1)q + k, with s in 1..n. Throws
/// std::out_of_range on coordinates outside dims.
int vertex_index(VertexCoord c, TripartiteDims d);

/// Inverse of vertex_index. Throws std::out_of_range for s outside 1..n.
VertexCoord vertex_coord(int s, TripartiteDims d);

/// Unordered loop-free pair of 1-based flat vertex indices, stored with the
/// smaller index first.
struct Edge {
  int a;
  int b;

  Edge(int x, int y);
  auto operator<=>(const Edge&) const = default;
};

/// How an edge sits on the tripartite grid: in which subsystems do its
/// endpoint coordinates differ.
struct EdgeClass {
  enum class Tag { OneCoord, TwoCoord, ThreeCoord };

  Tag tag;
  std::array<bool, 3> differs; // indexed by Subsystem

  int differ_count() const { return differs[0] + differs[1] + differs[2]; }
};

/// Loop-free undirected graph on n = m*p*q vertices with tripartite
/// indexing. Immutable after construction; all operations are pure.
class Graph {
 public:
  explicit Graph(TripartiteDims dims);
  Graph(TripartiteDims dims, const std::vector<Edge>& edges);

  const TripartiteDims& dims() const { return dims_; }
  int vertex_count() const { return dims_.order(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(const Edge& e) const { return edges_.count(e) > 0; }

  int degree(int vertex) const; // 1-based
  int degree_sum() const;       // d_G = 2|E|
  std::vector<int> degree_sequence() const;

  bool operator==(const Graph& other) const {
    return dims_ == other.dims_ && edges_ == other.edges_;
  }

 private:
  TripartiteDims dims_;
  std::set<Edge> edges_;
};

RatMatrix adjacency_matrix(const Graph& g);
RatMatrix degree_matrix(const Graph& g);
RatMatrix laplacian(const Graph& g); // Delta(G) - M(G)

/// Tensor product: adjacency equals the Kronecker product of the factor
/// adjacencies; result dims are the factor vertex counts.
Graph tensor_product(const Graph& g1, const Graph& g2, const Graph& g3);

Graph complete_graph(int n);
Graph complete_graph(TripartiteDims dims);
/// Star K_{1,n-1} with the center at vertex 1. Requires n >= 2.
Graph star_graph(int n);
Graph star_graph(TripartiteDims dims);

EdgeClass classify_edge(const Edge& e, TripartiteDims d);

/// True iff every edge connects unit-cube neighbors: all coordinate
/// differences at most 1 (both diagonal orientations count).
bool is_nearest_point_graph(const Graph& g);

/// Relabels vertices: edge {a, b} becomes {perm[a], perm[b]}. perm is
/// 1-based (perm[0] unused) and must be a bijection on 1..n.
Graph apply_vertex_permutation(const Graph& g, const std::vector<int>& perm);

} // namespace graphsep

#endif
