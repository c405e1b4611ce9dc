#ifndef GRAPHSEP_RAT_MATRIX_HPP
#define GRAPHSEP_RAT_MATRIX_HPP

#include "graphsep/rational.hpp"

#include <vector>

namespace graphsep {

/// Dense square matrix of exact rationals, row-major, 0-based indexing.
class RatMatrix {
 public:
  RatMatrix() : order_(0) {}
  explicit RatMatrix(int order);

  static RatMatrix identity(int n);
  static RatMatrix ones(int n); // J_n, the all-ones matrix

  int order() const { return order_; }

  Rational& at(int row, int col) { return entries_[index(row, col)]; }
  const Rational& at(int row, int col) const { return entries_[index(row, col)]; }

  Rational trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& scalar);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  bool operator==(const RatMatrix& other) const;
  bool operator!=(const RatMatrix& other) const { return !(*this == other); }

  /// Submatrix on the given 0-based row/column index set, in the given order.
  RatMatrix submatrix(const std::vector<int>& keep) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * order_ + col;
  }

  int order_;
  std::vector<Rational> entries_;
};

RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron3(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c);

} // namespace graphsep

#endif
