#include "graphsep/rat_matrix.hpp"

#include <stdexcept>

namespace graphsep {

RatMatrix::RatMatrix(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("matrix order must be non-negative");
  entries_.assign(static_cast<std::size_t>(order) * order, Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::ones(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = 1;
  return m;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (order_ != other.order_) throw std::invalid_argument("matrix order mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (order_ != other.order_) throw std::invalid_argument("matrix order mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("matrix order mismatch");
  const int n = a.order_;
  RatMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj == 0) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return order_ == other.order_ && entries_ == other.entries_;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& keep) const {
  RatMatrix out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= order_) throw std::out_of_range("submatrix index");
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
    }
  }
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  const int na = a.order(), nb = b.order();
  RatMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Rational& aij = a.at(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) {
          const Rational& bkl = b.at(k, l);
          if (bkl == 0) continue;
          out.at(i * nb + k, j * nb + l) = aij * bkl;
        }
    }
  return out;
}

RatMatrix kron3(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) {
  return kron(kron(a, b), c);
}

} // namespace graphsep
