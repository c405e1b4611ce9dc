#include "graphsep/separability.hpp"

#include "graphsep/transpose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphsep {

namespace {

Int dot_self(const std::vector<Int>& v) {
  Int s = 0;
  for (const Int& x : v) s += x * x;
  return s;
}

// Sign patterns (s_u, s_v, s_w) with s_u * s_v * s_w = -1, in the order the
// four-term mixtures are assembled everywhere in this module.
constexpr std::array<std::array<int, 3>, 4> kMinusPatterns = {{
    {+1, -1, +1},
    {+1, +1, -1},
    {-1, -1, -1},
    {-1, +1, +1},
}};

std::vector<Int> basis_vector(int dim, int index /*1-based*/) {
  std::vector<Int> v(dim, Int(0));
  v[index - 1] = 1;
  return v;
}

std::vector<Int> pair_vector(int dim, int first, int second, int sign) {
  std::vector<Int> v(dim, Int(0));
  v[first - 1] = 1;
  v[second - 1] += sign; // first == second cannot happen for differing coords
  return v;
}

} // namespace

PureProductState::PureProductState(std::vector<Int> va, std::vector<Int> vb,
                                   std::vector<Int> vc)
    : a(std::move(va)), b(std::move(vb)), c(std::move(vc)) {
  norm2_a = dot_self(a);
  norm2_b = dot_self(b);
  norm2_c = dot_self(c);
  if (norm2_a == 0 || norm2_b == 0 || norm2_c == 0) {
    throw std::invalid_argument("product state factor vector is all-zero");
  }
}

RatMatrix projector(const PureProductState& s) {
  const int m = static_cast<int>(s.a.size());
  const int p = static_cast<int>(s.b.size());
  const int q = static_cast<int>(s.c.size());
  const int n = m * p * q;
  const Rational scale(1, s.norm2_a * s.norm2_b * s.norm2_c);

  // Flat product vector, then rank-1 outer product.
  std::vector<Int> full(n);
  int idx = 0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < q; ++z) full[idx++] = s.a[x] * s.b[y] * s.c[z];

  RatMatrix out(n);
  for (int r = 0; r < n; ++r) {
    if (full[r] == 0) continue;
    for (int c = 0; c < n; ++c) {
      if (full[c] == 0) continue;
      out.at(r, c) = scale * full[r] * full[c];
    }
  }
  return out;
}

Rational SeparableDecomposition::weight_sum() const {
  Rational s = 0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

Verdict Verdict::separable(SeparableDecomposition d) {
  Verdict v;
  v.kind = VerdictKind::Separable;
  v.decomposition = std::move(d);
  return v;
}

Verdict Verdict::npt(NptWitness w) {
  Verdict v;
  v.kind = VerdictKind::NPT;
  v.witness = std::move(w);
  return v;
}

Verdict Verdict::inconclusive(std::string reason) {
  Verdict v;
  v.kind = VerdictKind::Inconclusive;
  v.reason = std::move(reason);
  return v;
}

Verdict ppt_test(const DensityMatrix& rho) {
  for (Subsystem sub : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    RatMatrix pt = partial_transpose(rho, sub);
    if (!is_psd_exact(pt)) {
      NptWitness w;
      w.subsystem = sub;
      w.evidence = char_poly(pt);
      w.min_eig_approx = eigenvalues_float(pt).front();
      return Verdict::npt(std::move(w));
    }
  }
  return Verdict::inconclusive("PPT");
}

SeparableDecomposition decompose_quadruple(VertexCoord first, VertexCoord second,
                                           TripartiteDims dims) {
  vertex_index(first, dims);  // range checks
  vertex_index(second, dims);
  if (first.i == second.i || first.j == second.j || first.k == second.k) {
    throw std::invalid_argument(
        "decompose_quadruple requires endpoints differing in all three coordinates");
  }
  SeparableDecomposition out;
  for (const auto& pat : kMinusPatterns) {
    out.terms.push_back(
        {Rational(1, 4),
         PureProductState(pair_vector(dims.m, first.i, second.i, pat[0]),
                          pair_vector(dims.p, first.j, second.j, pat[1]),
                          pair_vector(dims.q, first.k, second.k, pat[2]))});
  }
  return out;
}

namespace {

Edge swap_coordinate(const Edge& e, Subsystem sub, TripartiteDims dims) {
  VertexCoord u = vertex_coord(e.a, dims);
  VertexCoord v = vertex_coord(e.b, dims);
  std::swap(u.coord(sub), v.coord(sub));
  return Edge(vertex_index(u, dims), vertex_index(v, dims));
}

std::string edge_label(const Edge& e, TripartiteDims dims) {
  const VertexCoord u = vertex_coord(e.a, dims);
  const VertexCoord v = vertex_coord(e.b, dims);
  std::ostringstream os;
  os << "{(" << u.i << "," << u.j << "," << u.k << "),(" << v.i << "," << v.j << ","
     << v.k << ")}";
  return os.str();
}

} // namespace

SeparableDecomposition decompose_by_edge_orbits(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("decompose_by_edge_orbits requires at least one edge");
  }
  if (!degree_condition(g).holds) {
    throw std::domain_error("decompose_by_edge_orbits requires the degree condition");
  }
  const TripartiteDims dims = g.dims();
  const Rational edge_weight(1, g.edge_count());

  SeparableDecomposition out;
  std::set<Edge> consumed;
  for (const Edge& e : g.edges()) {
    if (consumed.count(e)) continue;
    const VertexCoord u = vertex_coord(e.a, dims);
    const VertexCoord v = vertex_coord(e.b, dims);
    const EdgeClass cls = classify_edge(e, dims);

    switch (cls.tag) {
      case EdgeClass::Tag::OneCoord: {
        // Already a product projector: basis vectors on the shared
        // coordinates, (|x> - |y>) on the differing one.
        auto vec = [&](Subsystem s, int dim) {
          return cls.differs[static_cast<int>(s)]
                     ? pair_vector(dim, u.coord(s), v.coord(s), -1)
                     : basis_vector(dim, u.coord(s));
        };
        out.terms.push_back({edge_weight, PureProductState(vec(Subsystem::A, dims.m),
                                                           vec(Subsystem::B, dims.p),
                                                           vec(Subsystem::C, dims.q))});
        consumed.insert(e);
        break;
      }
      case EdgeClass::Tag::TwoCoord: {
        // The coordinate swap in either differing plane yields the same
        // unique partner edge. The first differing subsystem carries the
        // sign s, the second -s.
        const Subsystem d1 = cls.differs[0] ? Subsystem::A : Subsystem::B;
        const Edge partner = swap_coordinate(e, d1, dims);
        if (!g.has_edge(partner)) {
          throw OrbitPairingError("missing partner edge " + edge_label(partner, dims) +
                                  " for " + edge_label(e, dims));
        }
        for (int s : {+1, -1}) {
          auto vec = [&](Subsystem sub, int dim) {
            if (!cls.differs[static_cast<int>(sub)]) {
              return basis_vector(dim, u.coord(sub));
            }
            return pair_vector(dim, u.coord(sub), v.coord(sub), sub == d1 ? s : -s);
          };
          out.terms.push_back({edge_weight, PureProductState(vec(Subsystem::A, dims.m),
                                                             vec(Subsystem::B, dims.p),
                                                             vec(Subsystem::C, dims.q))});
        }
        consumed.insert(e);
        consumed.insert(partner);
        break;
      }
      case EdgeClass::Tag::ThreeCoord: {
        const std::array<Edge, 3> partners = {swap_coordinate(e, Subsystem::A, dims),
                                              swap_coordinate(e, Subsystem::B, dims),
                                              swap_coordinate(e, Subsystem::C, dims)};
        for (const Edge& partner : partners) {
          if (!g.has_edge(partner)) {
            throw OrbitPairingError("missing partner edge " + edge_label(partner, dims) +
                                    " for entangled edge " + edge_label(e, dims));
          }
        }
        SeparableDecomposition quad = decompose_quadruple(u, v, dims);
        for (auto& t : quad.terms) {
          out.terms.push_back({edge_weight, std::move(t.state)});
        }
        consumed.insert(e);
        for (const Edge& partner : partners) consumed.insert(partner);
        break;
      }
    }
  }
  return out;
}

SeparableDecomposition decompose_tensor_product(const Graph& g1, const Graph& g2,
                                                const Graph& g3) {
  if (g1.edge_count() == 0 || g2.edge_count() == 0 || g3.edge_count() == 0) {
    throw std::invalid_argument("decompose_tensor_product requires edges in every factor");
  }
  const Rational weight(Int(1),
                        Int(4) * g1.edge_count() * g2.edge_count() * g3.edge_count());
  SeparableDecomposition out;
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& e2 : g2.edges()) {
      for (const Edge& e3 : g3.edges()) {
        for (const auto& pat : kMinusPatterns) {
          out.terms.push_back(
              {weight,
               PureProductState(pair_vector(g1.vertex_count(), e1.a, e1.b, pat[0]),
                                pair_vector(g2.vertex_count(), e2.a, e2.b, pat[1]),
                                pair_vector(g3.vertex_count(), e3.a, e3.b, pat[2]))});
        }
      }
    }
  }
  return out;
}

StarWitness star_witness(int n, TripartiteDims dims) {
  if (dims.m < 2 || dims.p < 2 || dims.q < 2) {
    throw std::invalid_argument("star_witness requires m, p, q >= 2");
  }
  if (n != dims.order()) {
    throw std::invalid_argument("star_witness: n must equal m*p*q");
  }
  if (n < 8) {
    throw std::invalid_argument("star_witness requires n >= 8");
  }

  const DensityMatrix rho = rho_star(dims);

  // (P (x) Q (x) R) rho (P (x) Q (x) R) with rank-2 local projectors keeps
  // exactly the basis vectors with all coordinates in {1, 2}; restricting to
  // them gives an 8-dim block ordered as dims (2,2,2).
  std::vector<int> keep;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        keep.push_back(vertex_index({i, j, k}, dims) - 1);
  const RatMatrix restricted = rho.mat.submatrix(keep);
  const RatMatrix transposed = partial_transpose(restricted, {2, 2, 2}, Subsystem::A);

  StarWitness w;
  w.n = n;
  w.dims = dims;
  w.restricted_char_poly = char_poly(transposed);
  w.repeated_root = Rational(1, 2 * (n - 1));

  // Peel off (l - 1/(2(n-1))) factors; exactly five must divide.
  std::vector<Rational> rest = w.restricted_char_poly.coeffs;
  w.repeated_multiplicity = 0;
  while (rest.size() > 1) {
    Rational rem;
    std::vector<Rational> q = poly_divide_linear(rest, w.repeated_root, rem);
    if (rem != 0) break;
    rest = std::move(q);
    ++w.repeated_multiplicity;
  }
  if (w.repeated_multiplicity != 5 || rest.size() != 4) {
    throw std::logic_error("star witness factorization does not match the closed form");
  }
  w.cubic.coeffs = std::move(rest);

  // Closed-form cubic: l^3 - (n+1)/(2(n-1)) l^2 + (n-4)/(2(n-1)^2) l
  //                    + (n+4)/(4(n-1)^3).
  const Int nm1 = n - 1;
  const CharPoly expected_cubic{{Rational(1), Rational(Int(-(n + 1)), 2 * nm1),
                                 Rational(Int(n - 4), 2 * nm1 * nm1),
                                 Rational(Int(n + 4), 4 * nm1 * nm1 * nm1)}};
  if (!(w.cubic == expected_cubic)) {
    throw std::logic_error("star witness cubic does not match the closed form");
  }

  w.root_product = -w.cubic.coeffs.back(); // monic cubic: product = -constant
  w.negative_roots = count_negative_roots(w.cubic);
  if (w.negative_roots != 1 || w.root_product >= 0) {
    throw std::logic_error("star witness cubic must have exactly one negative root");
  }
  return w;
}

std::optional<std::string> check_decomposition(const DensityMatrix& rho,
                                               const SeparableDecomposition& d) {
  const TripartiteDims dims = rho.dims;
  for (std::size_t t = 0; t < d.terms.size(); ++t) {
    const auto& s = d.terms[t].state;
    if (static_cast<int>(s.a.size()) != dims.m || static_cast<int>(s.b.size()) != dims.p ||
        static_cast<int>(s.c.size()) != dims.q) {
      throw std::invalid_argument("term " + std::to_string(t) +
                                  ": factor vector lengths do not match dims");
    }
    if (d.terms[t].weight <= 0) {
      return "term " + std::to_string(t) + ": weight " + rat_to_string(d.terms[t].weight) +
             " is not positive";
    }
  }
  const Rational total = d.weight_sum();
  if (total != 1) {
    return "weights sum to " + rat_to_string(total) + ", expected 1/1";
  }
  RatMatrix sum(rho.mat.order());
  for (const auto& term : d.terms) {
    sum += projector(term.state) * term.weight;
  }
  for (int r = 0; r < sum.order(); ++r) {
    for (int c = 0; c < sum.order(); ++c) {
      if (sum.at(r, c) != rho.mat.at(r, c)) {
        return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
               "): reconstruction gives " + rat_to_string(sum.at(r, c)) + ", density has " +
               rat_to_string(rho.mat.at(r, c));
      }
    }
  }
  return std::nullopt;
}

bool verify_decomposition(const DensityMatrix& rho, const SeparableDecomposition& d) {
  return !check_decomposition(rho, d).has_value();
}

Verdict classify(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::domain_error("classify requires at least one edge (density undefined)");
  }
  const DensityMatrix rho = density_matrix(g);

  if (!degree_condition(g).holds) {
    Verdict v = ppt_test(rho);
    if (v.kind == VerdictKind::NPT) return v;
    return Verdict::inconclusive(
        "degree condition fails but all three partial transposes are PSD");
  }

  try {
    SeparableDecomposition d = decompose_by_edge_orbits(g);
    if (auto mismatch = check_decomposition(rho, d)) {
      throw std::logic_error("orbit decomposition failed verification: " + *mismatch);
    }
    return Verdict::separable(std::move(d));
  } catch (const OrbitPairingError& e) {
    return Verdict::inconclusive(std::string("degree condition holds but ") + e.what());
  }
}

} // namespace graphsep
