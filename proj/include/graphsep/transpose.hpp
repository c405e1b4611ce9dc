#ifndef GRAPHSEP_TRANSPOSE_HPP
#define GRAPHSEP_TRANSPOSE_HPP

#include "graphsep/graph.hpp"

#include <array>
#include <vector>

namespace graphsep {

struct DegreeMismatch {
  int vertex;     // 1-based flat index
  int degree_g;   // degree in G
  int degree_pt;  // degree in the partially transposed graph
};

/// Result of comparing Delta(G) against all three partially transposed
/// graphs. holds == true iff every mismatch list is empty.
struct DegreeReport {
  bool holds = true;
  std::array<std::vector<DegreeMismatch>, 3> mismatches; // indexed by Subsystem
};

/// Graph-level partial transpose: each edge swaps the chosen subsystem's
/// coordinate between its endpoints. Involution; preserves |E|. The
/// adjacency matrix of the result equals the matrix partial transpose of
/// adjacency_matrix(g).
Graph partial_transpose_graph(const Graph& g, Subsystem sub);

/// The degree condition: Delta(G) = Delta(G^Gamma) for all three cuts is
/// necessary for separability. Works on degree sequences, so edgeless
/// graphs are fine.
DegreeReport degree_condition(const Graph& g);

} // namespace graphsep

#endif
