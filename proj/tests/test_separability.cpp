#include "graphsep/separability.hpp"

#include "graphsep/density.hpp"
#include "graphsep/transpose.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace graphsep;

namespace {

// Canonical fixtures used throughout: the 12-vertex single-edge graph and
// its relabeled, separable sibling.
const TripartiteDims kDims322{3, 2, 2};

Graph example_graph() { return Graph(kDims322, {Edge(1, 8)}); }
Graph h_graph() { return Graph(kDims322, {Edge(1, 2)}); }

// Serialized projector matrices, for comparing decompositions as multisets.
std::multiset<std::string> projector_multiset(const SeparableDecomposition& d) {
  std::multiset<std::string> out;
  for (const auto& t : d.terms) {
    const RatMatrix p = projector(t.state);
    std::string s;
    for (int r = 0; r < p.order(); ++r)
      for (int c = 0; c < p.order(); ++c) s += rat_to_string(p.at(r, c)) + ";";
    out.insert(std::move(s));
  }
  return out;
}

} // namespace

TEST_CASE("projector and PureProductState basics") {
  CHECK_THROWS_AS(PureProductState({Int(0)}, {Int(1)}, {Int(1)}), std::invalid_argument);

  const PureProductState s({Int(1)}, {Int(1), Int(-1)}, {Int(1), Int(1)});
  const RatMatrix p = projector(s);
  CHECK(p.order() == 4);
  CHECK(p.trace() == 1);
  CHECK(p.at(0, 0) == Rational(1, 4));
  CHECK(p.at(0, 1) == Rational(1, 4));
  CHECK(p.at(0, 2) == Rational(-1, 4));
  CHECK(is_psd_exact(p));
}

TEST_CASE("decompose_quadruple equals the four-edge mixture, exhaustive") {
  for (const TripartiteDims dims : {TripartiteDims{2, 2, 2}, TripartiteDims{3, 2, 2}}) {
    for (int i = 1; i <= dims.m; ++i)
      for (int r = 1; r <= dims.m; ++r)
        for (int j = 1; j <= dims.p; ++j)
          for (int s = 1; s <= dims.p; ++s)
            for (int k = 1; k <= dims.q; ++k)
              for (int t = 1; t <= dims.q; ++t) {
                if (i == r || j == s || k == t) continue;
                const VertexCoord first{i, j, k}, second{r, s, t};
                const SeparableDecomposition d =
                    decompose_quadruple(first, second, dims);
                REQUIRE(d.terms.size() == 4);
                for (const auto& term : d.terms) CHECK(term.weight == Rational(1, 4));
                CHECK(d.weight_sum() == 1);
                CHECK(testutil::brute_reconstruct(d, dims) ==
                      testutil::brute_sigma(first, second, dims));
              }
  }
}

TEST_CASE("decompose_quadruple endpoint swap yields the same projectors") {
  const TripartiteDims dims{3, 2, 2};
  const VertexCoord a{1, 1, 1}, b{2, 2, 2};
  CHECK(projector_multiset(decompose_quadruple(a, b, dims)) ==
        projector_multiset(decompose_quadruple(b, a, dims)));
}

TEST_CASE("decompose_quadruple rejects equal coordinates") {
  const TripartiteDims dims{2, 2, 2};
  CHECK_THROWS_AS(decompose_quadruple({1, 1, 1}, {1, 2, 2}, dims), std::invalid_argument);
  CHECK_THROWS_AS(decompose_quadruple({1, 1, 1}, {2, 1, 2}, dims), std::invalid_argument);
  CHECK_THROWS_AS(decompose_quadruple({1, 1, 1}, {2, 2, 1}, dims), std::invalid_argument);
}

TEST_CASE("ppt_test") {
  SUBCASE("the example graph is NPT on A with root -1/2") {
    const Verdict v = ppt_test(density_matrix(example_graph()));
    REQUIRE(v.kind == VerdictKind::NPT);
    CHECK(v.witness->subsystem == Subsystem::A);
    // l^8 (l - 1/2)^3 (l + 1/2)
    const std::vector<Rational> expected = poly_mul(
        poly_mul({1, 0, 0, 0, 0, 0, 0, 0, 0}, // l^8
                 poly_mul(poly_mul({1, Rational(-1, 2)}, {1, Rational(-1, 2)}),
                          {1, Rational(-1, 2)})),
        {1, Rational(1, 2)});
    CHECK(v.witness->evidence.coeffs == expected);
    CHECK(count_negative_roots(v.witness->evidence) == 1);
    CHECK(v.witness->min_eig_approx == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("H is PPT") {
    const Verdict v = ppt_test(density_matrix(h_graph()));
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.reason == "PPT");
  }
  SUBCASE("K_8 on (2,2,2) is PPT") {
    const Verdict v = ppt_test(density_matrix(complete_graph(TripartiteDims{2, 2, 2})));
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.reason == "PPT");
  }
}

TEST_CASE("decompose_by_edge_orbits") {
  SUBCASE("H decomposes into one product term") {
    const SeparableDecomposition d = decompose_by_edge_orbits(h_graph());
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 1);
    CHECK(d.terms[0].state.a == std::vector<Int>{1, 0, 0});
    CHECK(d.terms[0].state.b == std::vector<Int>{1, 0});
    CHECK(d.terms[0].state.c == std::vector<Int>{1, -1});
    CHECK(verify_decomposition(density_matrix(h_graph()), d));
  }

  SUBCASE("full quadruple on (2,2,2)") {
    const TripartiteDims dims{2, 2, 2};
    const auto idx = [&](int i, int j, int k) { return vertex_index({i, j, k}, dims); };
    const Graph g(dims, {Edge(idx(1, 1, 1), idx(2, 2, 2)), Edge(idx(2, 1, 1), idx(1, 2, 2)),
                         Edge(idx(1, 2, 1), idx(2, 1, 2)), Edge(idx(1, 1, 2), idx(2, 2, 1))});
    const SeparableDecomposition d = decompose_by_edge_orbits(g);
    REQUIRE(d.terms.size() == 4);
    for (const auto& t : d.terms) CHECK(t.weight == Rational(1, 4));
    CHECK(verify_decomposition(density_matrix(g), d));
    CHECK(testutil::brute_reconstruct(d, dims) == density_matrix(g).mat);
  }

  SUBCASE("complete graphs decompose through their edge orbits") {
    for (const TripartiteDims dims : {TripartiteDims{2, 2, 2}, TripartiteDims{3, 2, 2}}) {
      const Graph kn = complete_graph(dims);
      const SeparableDecomposition d = decompose_by_edge_orbits(kn);
      CHECK(d.weight_sum() == 1);
      CHECK(verify_decomposition(density_matrix(kn), d));
      CHECK(testutil::brute_reconstruct(d, dims) == density_matrix(kn).mat);
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(decompose_by_edge_orbits(Graph(kDims322)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_by_edge_orbits(example_graph()), std::domain_error);
  }
}

TEST_CASE("degree condition does not guarantee orbit pairing") {
  // Perfect matching on the 2x2x2 cube mixing anti-diagonal entangled edges
  // with two-coordinate edges: every vertex has degree 1 in the graph and in
  // all three transposed graphs, yet {1,4}'s partner {2,3} is absent. Its
  // density is PPT everywhere and has no real product decomposition at all
  // (the only real product vectors in its range span rank 2 of 4), so
  // Inconclusive is the only honest integer-certificate answer.
  const TripartiteDims dims{2, 2, 2};
  const Graph g(dims, {Edge(1, 4), Edge(2, 7), Edge(3, 6), Edge(5, 8)});

  CHECK(is_nearest_point_graph(g));
  CHECK(degree_condition(g).holds);
  CHECK_THROWS_AS(decompose_by_edge_orbits(g), OrbitPairingError);

  const Verdict ppt = ppt_test(density_matrix(g));
  CHECK(ppt.kind == VerdictKind::Inconclusive);
  CHECK(ppt.reason == "PPT");

  const Verdict v = classify(g);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.reason.find("missing partner edge") != std::string::npos);
}

TEST_CASE("decompose_tensor_product") {
  const Graph k2 = complete_graph(2);
  const Graph k3 = complete_graph(3);

  SUBCASE("K_2 (x) K_2 (x) K_2") {
    const SeparableDecomposition d = decompose_tensor_product(k2, k2, k2);
    REQUIRE(d.terms.size() == 4);
    for (const auto& t : d.terms) CHECK(t.weight == Rational(1, 4));
    const DensityMatrix rho = density_matrix(tensor_product(k2, k2, k2));
    CHECK(verify_decomposition(rho, d));
  }

  SUBCASE("K_2 (x) K_2 (x) K_3 has 4 terms per edge triple") {
    const SeparableDecomposition d = decompose_tensor_product(k2, k2, k3);
    REQUIRE(d.terms.size() == 12); // 4 * |E1| * |E2| * |E3|
    CHECK(d.weight_sum() == 1);
    const DensityMatrix rho = density_matrix(tensor_product(k2, k2, k3));
    CHECK(verify_decomposition(rho, d));
    CHECK(testutil::brute_reconstruct(d, rho.dims) == rho.mat);
  }

  SUBCASE("relabeled factors verify the same way") {
    const Graph k2_swapped(TripartiteDims{1, 1, 2}, {Edge(2, 1)});
    const SeparableDecomposition d = decompose_tensor_product(k2_swapped, k2, k3);
    CHECK(verify_decomposition(density_matrix(tensor_product(k2_swapped, k2, k3)), d));
  }

  SUBCASE("edgeless factor is rejected") {
    CHECK_THROWS_AS(decompose_tensor_product(Graph(TripartiteDims{1, 1, 2}), k2, k3),
                    std::invalid_argument);
  }
}

TEST_CASE("decompose_tensor_product verifies on random factor triples") {
  std::mt19937_64 rng(1212);
  int done = 0;
  while (done < 15) {
    const auto factor = [&](int n) {
      Graph g = testutil::random_graph({1, 1, n}, rng, 50);
      return g;
    };
    const Graph g1 = factor(2 + testutil::rand_below(rng, 2));
    const Graph g2 = factor(2 + testutil::rand_below(rng, 2));
    const Graph g3 = factor(2 + testutil::rand_below(rng, 2));
    if (g1.edge_count() == 0 || g2.edge_count() == 0 || g3.edge_count() == 0) continue;
    ++done;
    const SeparableDecomposition d = decompose_tensor_product(g1, g2, g3);
    CHECK(d.weight_sum() == 1);
    CHECK(verify_decomposition(density_matrix(tensor_product(g1, g2, g3)), d));
  }
}

TEST_CASE("star_witness") {
  SUBCASE("n = 8") {
    const StarWitness w = star_witness(8, TripartiteDims{2, 2, 2});
    CHECK(w.repeated_root == Rational(1, 14));
    CHECK(w.repeated_multiplicity == 5);
    CHECK(w.cubic.coeffs ==
          std::vector<Rational>{1, Rational(-9, 14), Rational(2, 49), Rational(3, 343)});
    CHECK(w.root_product == Rational(-3, 343));
    CHECK(w.negative_roots == 1);
  }
  SUBCASE("n = 12 root product") {
    const StarWitness w = star_witness(12, TripartiteDims{3, 2, 2});
    CHECK(w.root_product == Rational(-16, 5324));
    CHECK(w.root_product == Rational(-4, 1331));
    CHECK(w.repeated_multiplicity == 5);
  }
  SUBCASE("restricted char poly matches the reassembled product") {
    for (const auto& [n, dims] :
         std::vector<std::pair<int, TripartiteDims>>{{8, {2, 2, 2}}, {12, {3, 2, 2}}}) {
      const StarWitness w = star_witness(n, dims);
      std::vector<Rational> product = w.cubic.coeffs;
      const std::vector<Rational> linear{1, -w.repeated_root};
      for (int rep = 0; rep < 5; ++rep) product = poly_mul(product, linear);
      CHECK(w.restricted_char_poly.coeffs == product);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(star_witness(8, TripartiteDims{1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(star_witness(12, TripartiteDims{2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(star_witness(4, TripartiteDims{2, 2, 1}), std::invalid_argument);
  }
}

TEST_CASE("verify_decomposition") {
  const DensityMatrix rho = density_matrix(h_graph());
  SeparableDecomposition good = decompose_by_edge_orbits(h_graph());
  CHECK(verify_decomposition(rho, good));

  SUBCASE("tampered weight fails on the sum") {
    SeparableDecomposition bad = good;
    bad.terms[0].weight = Rational(1, 3);
    const auto msg = check_decomposition(rho, bad);
    REQUIRE(msg.has_value());
    CHECK(msg->find("weights sum") != std::string::npos);
    CHECK_FALSE(verify_decomposition(rho, bad));
  }

  SUBCASE("tampered state fails entrywise") {
    SeparableDecomposition bad = good;
    bad.terms[0].state = PureProductState({Int(1), Int(0), Int(0)}, {Int(1), Int(0)},
                                          {Int(1), Int(1)});
    const auto msg = check_decomposition(rho, bad);
    REQUIRE(msg.has_value());
    CHECK(msg->find("entry") != std::string::npos);
  }

  SUBCASE("shape mismatch throws") {
    SeparableDecomposition bad = good;
    bad.terms[0].state = PureProductState({Int(1)}, {Int(1), Int(0)}, {Int(1), Int(-1)});
    CHECK_THROWS_AS(check_decomposition(rho, bad), std::invalid_argument);
  }

  SUBCASE("non-positive weight is rejected") {
    SeparableDecomposition bad = good;
    bad.terms.push_back({Rational(0), bad.terms[0].state});
    const auto msg = check_decomposition(rho, bad);
    REQUIRE(msg.has_value());
    CHECK(msg->find("not positive") != std::string::npos);
  }
}

TEST_CASE("classify") {
  SUBCASE("example graph is NPT on A") {
    const Verdict v = classify(example_graph());
    REQUIRE(v.kind == VerdictKind::NPT);
    CHECK(v.witness->subsystem == Subsystem::A);
  }
  SUBCASE("H is separable with one term") {
    const Verdict v = classify(h_graph());
    REQUIRE(v.kind == VerdictKind::Separable);
    CHECK(v.decomposition->terms.size() == 1);
  }
  SUBCASE("K_12 on (3,2,2) is separable with a verified decomposition") {
    const Verdict v = classify(complete_graph(kDims322));
    REQUIRE(v.kind == VerdictKind::Separable);
    CHECK(verify_decomposition(density_matrix(complete_graph(kDims322)), *v.decomposition));
  }
  SUBCASE("edgeless graphs are rejected") {
    CHECK_THROWS_AS(classify(Graph(kDims322)), std::domain_error);
  }
}

TEST_CASE("the example graph and H are permutation siblings with opposite verdicts") {
  std::vector<int> perm(13);
  for (int v = 1; v <= 12; ++v) perm[v] = v;
  perm[2] = 8;
  perm[8] = 2;
  CHECK(apply_vertex_permutation(example_graph(), perm) == h_graph());
  CHECK(classify(example_graph()).kind == VerdictKind::NPT);
  CHECK(classify(h_graph()).kind == VerdictKind::Separable);
}

TEST_CASE("sampled nearest point graphs: soundness and Peres consistency") {
  // Every verdict must carry a valid certificate, and no graph may look both
  // separable (verified decomposition) and NPT (exact negative root).
  std::mt19937_64 rng(1313);
  int separable = 0, npt = 0, inconclusive = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const TripartiteDims dims = (trial % 2 == 0) ? TripartiteDims{2, 2, 2} : kDims322;
    const Graph g =
        testutil::random_nearest_point_graph(dims, rng, 15 + 10 * (trial % 4));
    if (g.edge_count() == 0) continue;
    const Verdict v = classify(g);
    const DensityMatrix rho = density_matrix(g);
    switch (v.kind) {
      case VerdictKind::Separable: {
        ++separable;
        REQUIRE(v.decomposition.has_value());
        CHECK(verify_decomposition(rho, *v.decomposition));
        CHECK(testutil::brute_reconstruct(*v.decomposition, dims) == rho.mat);
        CHECK(ppt_test(rho).kind == VerdictKind::Inconclusive);
        break;
      }
      case VerdictKind::NPT: {
        ++npt;
        REQUIRE(v.witness.has_value());
        CHECK(count_negative_roots(v.witness->evidence) >= 1);
        break;
      }
      case VerdictKind::Inconclusive: {
        ++inconclusive;
        CHECK(ppt_test(rho).kind == VerdictKind::Inconclusive);
        break;
      }
    }
  }
  // the sample must actually exercise both certificate paths
  CHECK(separable > 0);
  CHECK(npt > 0);
}
