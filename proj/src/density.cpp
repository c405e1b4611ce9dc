#include "graphsep/density.hpp"

#include <stdexcept>

namespace graphsep {

DensityMatrix::DensityMatrix(RatMatrix m, TripartiteDims d) : mat(std::move(m)), dims(d) {
  if (mat.order() != dims.order()) {
    throw std::invalid_argument("density matrix order does not match dims");
  }
  if (!mat.is_symmetric()) {
    throw std::invalid_argument("density matrix must be symmetric");
  }
  if (mat.trace() != 1) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
}

DensityMatrix density_matrix(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::domain_error("density undefined for edgeless graph (d_G = 0)");
  }
  RatMatrix m = laplacian(g);
  m *= Rational(1, g.degree_sum());
  return DensityMatrix(std::move(m), g.dims());
}

DensityMatrix rho_plus(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::domain_error("rho_plus undefined for edgeless graph (d_G = 0)");
  }
  RatMatrix m = degree_matrix(g) + adjacency_matrix(g);
  m *= Rational(1, g.degree_sum());
  return DensityMatrix(std::move(m), g.dims());
}

namespace {

DensityMatrix edge_projector(const Edge& e, TripartiteDims dims, int cross_sign) {
  const int n = dims.order();
  if (e.a < 1 || e.b > n) throw std::out_of_range("edge endpoint outside 1..n");
  RatMatrix m(n);
  const Rational half(1, 2);
  m.at(e.a - 1, e.a - 1) = half;
  m.at(e.b - 1, e.b - 1) = half;
  m.at(e.a - 1, e.b - 1) = cross_sign * half;
  m.at(e.b - 1, e.a - 1) = cross_sign * half;
  return DensityMatrix(std::move(m), dims);
}

} // namespace

DensityMatrix edge_factor(const Edge& e, TripartiteDims dims) {
  return edge_projector(e, dims, -1);
}

DensityMatrix edge_factor(const Edge& e, int n) {
  return edge_factor(e, TripartiteDims{1, 1, n});
}

DensityMatrix edge_factor_plus(const Edge& e, TripartiteDims dims) {
  return edge_projector(e, dims, +1);
}

DensityMatrix edge_factor_plus(const Edge& e, int n) {
  return edge_factor_plus(e, TripartiteDims{1, 1, n});
}

DensityMatrix rho_complete(int n) { return rho_complete(TripartiteDims{1, 1, n}); }

DensityMatrix rho_complete(TripartiteDims dims) {
  const int n = dims.order();
  if (n < 2) throw std::invalid_argument("rho_complete needs n >= 2");
  RatMatrix m = RatMatrix::identity(n) * Rational(n) - RatMatrix::ones(n);
  m *= Rational(Int(1), Int(n) * (n - 1));
  return DensityMatrix(std::move(m), dims);
}

DensityMatrix rho_star(int n) { return rho_star(TripartiteDims{1, 1, n}); }

DensityMatrix rho_star(TripartiteDims dims) {
  const int n = dims.order();
  if (n < 2) throw std::invalid_argument("rho_star needs n >= 2");
  RatMatrix m(n);
  const Rational pre(1, 2 * (n - 1));
  m.at(0, 0) = pre * (n - 1);
  for (int v = 1; v < n; ++v) {
    m.at(v, v) = pre;
    m.at(0, v) = -pre;
    m.at(v, 0) = -pre;
  }
  return DensityMatrix(std::move(m), dims);
}

RatMatrix partial_transpose(const RatMatrix& m, TripartiteDims dims, Subsystem sub) {
  if (m.order() != dims.order()) {
    throw std::invalid_argument("partial_transpose: dims product does not match order");
  }
  RatMatrix out(m.order());
  for (int row = 1; row <= m.order(); ++row) {
    VertexCoord r = vertex_coord(row, dims);
    for (int col = 1; col <= m.order(); ++col) {
      VertexCoord c = vertex_coord(col, dims);
      // Swap the chosen subsystem's coordinate between row and column.
      VertexCoord r2 = r, c2 = c;
      std::swap(r2.coord(sub), c2.coord(sub));
      out.at(row - 1, col - 1) = m.at(vertex_index(r2, dims) - 1, vertex_index(c2, dims) - 1);
    }
  }
  return out;
}

RatMatrix partial_transpose(const DensityMatrix& rho, Subsystem sub) {
  return partial_transpose(rho.mat, rho.dims, sub);
}

} // namespace graphsep
