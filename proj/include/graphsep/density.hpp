#ifndef GRAPHSEP_DENSITY_HPP
#define GRAPHSEP_DENSITY_HPP

#include "graphsep/graph.hpp"
#include "graphsep/rat_matrix.hpp"

namespace graphsep {

/// Unit-trace symmetric matrix on the tripartite space. Construction checks
/// symmetry, trace and order; positive semidefiniteness is guaranteed by the
/// constructions used here and asserted exactly in the test suites.
struct DensityMatrix {
  RatMatrix mat;
  TripartiteDims dims;

  DensityMatrix(RatMatrix m, TripartiteDims d);
};

/// rho(G) = L(G) / d_G. Throws std::domain_error for edgeless graphs
/// (d_G = 0, density undefined).
DensityMatrix density_matrix(const Graph& g);

/// Signless companion (Delta(G) + M(G)) / d_G, the uniform mixture of the
/// per-edge plus-sign projectors.
DensityMatrix rho_plus(const Graph& g);

/// Rank-1 projector onto (|a> - |b>)/sqrt(2), the density of the single-edge
/// factor H_e.
DensityMatrix edge_factor(const Edge& e, TripartiteDims dims);
DensityMatrix edge_factor(const Edge& e, int n);

/// Rank-1 projector onto (|a> + |b>)/sqrt(2).
DensityMatrix edge_factor_plus(const Edge& e, TripartiteDims dims);
DensityMatrix edge_factor_plus(const Edge& e, int n);

/// Closed form rho(K_n) = (n I - J) / (n(n-1)). Requires n >= 2.
DensityMatrix rho_complete(int n);
DensityMatrix rho_complete(TripartiteDims dims);

/// Closed form rho(K_{1,n-1}) with prefactor 1/(2(n-1)). Requires n >= 2.
DensityMatrix rho_star(int n);
DensityMatrix rho_star(TripartiteDims dims);

/// Partial transpose of a tripartite matrix: transposes the chosen
/// subsystem's indices between bra and ket. Involution; preserves trace and
/// diagonal. Throws std::invalid_argument if dims don't match the order.
RatMatrix partial_transpose(const RatMatrix& m, TripartiteDims dims, Subsystem sub);
RatMatrix partial_transpose(const DensityMatrix& rho, Subsystem sub);

} // namespace graphsep

#endif
