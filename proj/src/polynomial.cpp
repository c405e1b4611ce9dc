#include "graphsep/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphsep {

Rational CharPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

CharPoly char_poly(const RatMatrix& a) {
  const int n = a.order();
  CharPoly p;
  p.coeffs.assign(n + 1, Rational(0));
  p.coeffs[0] = 1;

  // Faddeev-LeVerrier: M_k = A*M_{k-1} + c_{k-1} I, c_k = -tr(A*M_k)/k.
  RatMatrix am(n); // A * M_k, starts as A * M_0 = 0
  for (int k = 1; k <= n; ++k) {
    RatMatrix m = am;
    for (int i = 0; i < n; ++i) m.at(i, i) += p.coeffs[k - 1];
    am = a * m;
    p.coeffs[k] = -am.trace() / k;
  }
  return p;
}

bool is_psd_exact(const RatMatrix& a) {
  if (!a.is_symmetric()) {
    throw std::invalid_argument("is_psd_exact requires a symmetric matrix");
  }
  const CharPoly p = char_poly(a);
  // e_k = (-1)^k * coeff of l^(n-k)
  for (int k = 1; k <= p.degree(); ++k) {
    Rational ek = (k % 2 == 0) ? p.coeffs[k] : -p.coeffs[k];
    if (ek < 0) return false;
  }
  return true;
}

namespace {

// Polynomial helpers on highest-first coefficient vectors.
using Coeffs = std::vector<Rational>;

int degree(const Coeffs& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero_poly(const Coeffs& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

Coeffs trim_leading_zeros(Coeffs p) {
  std::size_t i = 0;
  while (i + 1 < p.size() && p[i] == 0) ++i;
  p.erase(p.begin(), p.begin() + i);
  return p;
}

Coeffs derivative(const Coeffs& p) {
  const int d = degree(p);
  if (d <= 0) return {Rational(0)};
  Coeffs out(d);
  for (int i = 0; i < d; ++i) out[i] = p[i] * (d - i);
  return out;
}

// Scales by a positive rational so coefficients become coprime integers.
// Positive scaling keeps every sign, which is all Sturm chains care about.
Coeffs make_primitive(Coeffs p) {
  Int den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, denominator(c));
  Int num_gcd = 0;
  for (auto& c : p) {
    c *= den_lcm;
    num_gcd = gcd(num_gcd, numerator(c));
  }
  if (num_gcd > 1) {
    for (auto& c : p) c /= num_gcd;
  }
  return p;
}

// Remainder of a / b, coefficients exact.
Coeffs poly_rem(Coeffs a, const Coeffs& b) {
  a = trim_leading_zeros(std::move(a));
  while (!is_zero_poly(a) && degree(a) >= degree(b)) {
    const Rational factor = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i] -= factor * b[i];
    }
    a = trim_leading_zeros(std::move(a));
  }
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  a = make_primitive(trim_leading_zeros(std::move(a)));
  b = make_primitive(trim_leading_zeros(std::move(b)));
  while (!is_zero_poly(b)) {
    Coeffs r = poly_rem(a, b);
    a = std::move(b);
    b = make_primitive(trim_leading_zeros(std::move(r)));
  }
  // canonical: positive leading coefficient
  if (a[0] < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient; the divisor must divide p.
Coeffs poly_div_exact(const Coeffs& p, const Coeffs& d) {
  const int dq = degree(p) - degree(d);
  if (dq < 0) throw std::logic_error("poly_div_exact: degree underflow");
  Coeffs rem = p;
  Coeffs q(dq + 1, Rational(0));
  for (int i = 0; i <= dq; ++i) {
    q[i] = rem[i] / d[0];
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q[i] * d[j];
  }
  if (!is_zero_poly(rem)) throw std::logic_error("poly_div_exact: inexact division");
  return q;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Distinct roots in (-inf, 0) of a square-free polynomial with p(0) != 0.
int sturm_count_negative(const Coeffs& p) {
  if (degree(p) == 0) return 0;
  std::vector<Coeffs> chain;
  chain.push_back(make_primitive(p));
  chain.push_back(make_primitive(derivative(p)));
  while (degree(chain.back()) > 0) {
    Coeffs r = poly_rem(chain[chain.size() - 2], chain.back());
    if (is_zero_poly(r)) break; // square-free input: only at a constant tail
    for (auto& c : r) c = -c;
    chain.push_back(make_primitive(trim_leading_zeros(std::move(r))));
  }

  std::vector<int> at_minus_inf, at_zero;
  for (const auto& q : chain) {
    const int lead = sign(q[0]);
    const int d = degree(q);
    at_minus_inf.push_back((d % 2 == 0) ? lead : -lead);
    at_zero.push_back(sign(q.back()));
  }
  return sign_changes(at_minus_inf) - sign_changes(at_zero);
}

} // namespace

int count_negative_roots(const CharPoly& p) {
  Coeffs c = p.coeffs;
  if (c.empty() || is_zero_poly(c)) {
    throw std::invalid_argument("count_negative_roots: zero polynomial");
  }
  c = trim_leading_zeros(std::move(c));
  // Roots at zero are not negative; peel them off so p(0) != 0 below.
  while (degree(c) > 0 && c.back() == 0) c.pop_back();
  if (degree(c) == 0) return 0;

  int total = 0;
  while (degree(c) > 0) {
    Coeffs g = poly_gcd(c, derivative(c));
    Coeffs squarefree = poly_div_exact(c, g);
    total += sturm_count_negative(make_primitive(std::move(squarefree)));
    c = std::move(g);
  }
  return total;
}

std::vector<double> eigenvalues_float(const RatMatrix& a, double tol) {
  const int n = a.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a.at(i, j).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    double v = solver.eigenvalues()(i);
    if (std::abs(v) < tol) v = 0.0;
    out[i] = v;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> poly_divide_linear(const std::vector<Rational>& p,
                                         const Rational& root,
                                         Rational& remainder) {
  if (p.empty()) throw std::invalid_argument("poly_divide_linear: empty polynomial");
  std::vector<Rational> q;
  q.reserve(p.size() - 1);
  Rational acc = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) {
    q.push_back(acc);
    acc = acc * root + p[i];
  }
  remainder = acc;
  return q;
}

} // namespace graphsep
