#ifndef GRAPHSEP_POLYNOMIAL_HPP
#define GRAPHSEP_POLYNOMIAL_HPP

#include "graphsep/rat_matrix.hpp"
#include "graphsep/rational.hpp"

#include <vector>

namespace graphsep {

/// Monic polynomial with exact rational coefficients, stored from the
/// highest-degree term down to the constant. For char_poly output this is
/// det(lambda*I - A), so degree equals the matrix order.
struct CharPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;

  bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }
};

/// Exact characteristic polynomial via the Faddeev-LeVerrier recurrence.
CharPoly char_poly(const RatMatrix& a);

/// Exact PSD test for symmetric matrices. Writing the characteristic
/// polynomial as l^n - e1 l^(n-1) + e2 l^(n-2) - ..., the matrix is PSD iff
/// every e_k >= 0 (the e_k are elementary symmetric functions of the real
/// spectrum). Throws std::invalid_argument on non-symmetric input.
bool is_psd_exact(const RatMatrix& a);

/// Number of strictly negative real roots, counted with multiplicity,
/// via square-free decomposition plus Sturm chains on (-inf, 0).
/// Callers supply polynomials with all-real roots (characteristic
/// polynomials of symmetric matrices or their factors).
/// Throws std::invalid_argument on the zero polynomial.
int count_negative_roots(const CharPoly& p);

/// Floating eigenvalues, ascending, for human-readable reporting only —
/// never used for verdicts. Values within tol of zero are snapped to zero.
std::vector<double> eigenvalues_float(const RatMatrix& a, double tol = 1e-10);

/// Coefficient-vector product (highest-first operands).
std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b);

/// Divides p by the linear factor (x - root). Returns the quotient and sets
/// `remainder` to p(root).
std::vector<Rational> poly_divide_linear(const std::vector<Rational>& p,
                                         const Rational& root,
                                         Rational& remainder);

} // namespace graphsep

#endif
