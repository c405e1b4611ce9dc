#include "graphsep/density.hpp"

#include "graphsep/polynomial.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace graphsep;

TEST_CASE("density_matrix examples") {
  SUBCASE("single edge is the pure minus projector") {
    const Graph g(TripartiteDims{1, 1, 2}, {Edge(1, 2)});
    const DensityMatrix rho = density_matrix(g);
    CHECK(rho.mat.at(0, 0) == Rational(1, 2));
    CHECK(rho.mat.at(0, 1) == Rational(-1, 2));
    CHECK(rho.mat == edge_factor(Edge(1, 2), 2).mat);
  }
  SUBCASE("K_4 closed form") {
    const DensityMatrix rho = density_matrix(complete_graph(4));
    const RatMatrix expected =
        (RatMatrix::identity(4) * Rational(4) - RatMatrix::ones(4)) * Rational(1, 12);
    CHECK(rho.mat == expected);
  }
  SUBCASE("star K_{1,3} closed form") {
    const DensityMatrix rho = density_matrix(star_graph(4));
    RatMatrix expected(4);
    expected.at(0, 0) = Rational(3, 6);
    for (int v = 1; v < 4; ++v) {
      expected.at(v, v) = Rational(1, 6);
      expected.at(0, v) = Rational(-1, 6);
      expected.at(v, 0) = Rational(-1, 6);
    }
    CHECK(rho.mat == expected);
  }
  SUBCASE("edgeless graph has no density") {
    CHECK_THROWS_AS(density_matrix(Graph(TripartiteDims{2, 2, 2})), std::domain_error);
  }
}

TEST_CASE("rho_plus examples") {
  const Graph single(TripartiteDims{1, 1, 2}, {Edge(1, 2)});
  const DensityMatrix rp = rho_plus(single);
  CHECK(rp.mat.at(0, 0) == Rational(1, 2));
  CHECK(rp.mat.at(0, 1) == Rational(1, 2));
  CHECK(rp.mat == edge_factor_plus(Edge(1, 2), 2).mat);

  SUBCASE("path 1-2-3") {
    const Graph path(TripartiteDims{1, 1, 3}, {Edge(1, 2), Edge(2, 3)});
    RatMatrix expected(3);
    expected.at(0, 0) = Rational(1, 4); expected.at(0, 1) = Rational(1, 4);
    expected.at(1, 0) = Rational(1, 4); expected.at(1, 1) = Rational(2, 4);
    expected.at(1, 2) = Rational(1, 4); expected.at(2, 1) = Rational(1, 4);
    expected.at(2, 2) = Rational(1, 4);
    CHECK(rho_plus(path).mat == expected);
  }
  CHECK_THROWS_AS(rho_plus(Graph(TripartiteDims{1, 1, 2})), std::domain_error);
}

TEST_CASE("edge factor mixture identities") {
  SUBCASE("K_3 by hand") {
    const Graph k3 = complete_graph(3);
    RatMatrix sum(3);
    for (const Edge& e : k3.edges()) sum += edge_factor(e, 3).mat;
    sum *= Rational(1, 3);
    CHECK(sum == density_matrix(k3).mat);
  }
  SUBCASE("100 random graphs on up to 12 vertices") {
    std::mt19937_64 rng(606);
    int done = 0;
    while (done < 100) {
      const int n = 2 + static_cast<int>(testutil::rand_below(rng, 11));
      const Graph g = testutil::random_graph({1, 1, n}, rng, 40);
      if (g.edge_count() == 0) continue;
      ++done;
      RatMatrix minus_sum(n), plus_sum(n);
      for (const Edge& e : g.edges()) {
        minus_sum += edge_factor(e, n).mat;
        plus_sum += edge_factor_plus(e, n).mat;
      }
      const Rational w(1, g.edge_count());
      CHECK(minus_sum * w == density_matrix(g).mat);
      CHECK(plus_sum * w == rho_plus(g).mat);

      // rho + rho_plus = (2/d_G) Delta
      CHECK(density_matrix(g).mat + rho_plus(g).mat ==
            degree_matrix(g) * Rational(2, g.degree_sum()));
    }
  }
}

TEST_CASE("partial transpose on matrices") {
  const TripartiteDims d{3, 2, 2};
  const Graph example(d, {Edge(1, 8)});
  const DensityMatrix rho = density_matrix(example);

  SUBCASE("the example's T_A pattern") {
    const RatMatrix pt = partial_transpose(rho, Subsystem::A);
    // diagonal untouched, cross entries move from (1,8) to (5,4)
    CHECK(pt.at(0, 0) == Rational(1, 2));
    CHECK(pt.at(7, 7) == Rational(1, 2));
    CHECK(pt.at(0, 7) == 0);
    CHECK(pt.at(4, 3) == Rational(-1, 2));
    CHECK(pt.at(3, 4) == Rational(-1, 2));
  }

  SUBCASE("diagonal matrices are fixed") {
    RatMatrix diag(12);
    for (int i = 0; i < 12; ++i) diag.at(i, i) = Rational(i, 12);
    for (Subsystem s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
      CHECK(partial_transpose(diag, d, s) == diag);
    }
  }

  SUBCASE("involution, trace and diagonal preservation") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = testutil::random_graph(d, rng, 25);
      if (g.edge_count() == 0) continue;
      const DensityMatrix r = density_matrix(g);
      for (Subsystem s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
        const RatMatrix pt = partial_transpose(r, s);
        CHECK(pt.is_symmetric());
        CHECK(pt.trace() == 1);
        for (int i = 0; i < pt.order(); ++i) CHECK(pt.at(i, i) == r.mat.at(i, i));
        CHECK(partial_transpose(pt, d, s) == r.mat);
      }
    }
  }

  SUBCASE("order mismatch is rejected") {
    CHECK_THROWS_AS(partial_transpose(RatMatrix(5), TripartiteDims{2, 2, 2}, Subsystem::A),
                    std::invalid_argument);
  }
}

TEST_CASE("closed forms match constructed graphs") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(rho_complete(n).mat == density_matrix(complete_graph(n)).mat);
    CHECK(rho_star(n).mat == density_matrix(star_graph(n)).mat);
  }
  CHECK(rho_star(4).mat.at(0, 0) == Rational(3, 6)); // prefactor 1/(2(n-1)) at n = 4
  CHECK_THROWS_AS(rho_complete(1), std::invalid_argument);
  CHECK_THROWS_AS(rho_star(1), std::invalid_argument);
}

TEST_CASE("densities are exactly PSD with unit trace") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph({2, 2, 2}, rng, 35);
    if (g.edge_count() == 0) continue;
    const DensityMatrix rho = density_matrix(g);
    CHECK(rho.mat.trace() == 1);
    CHECK(is_psd_exact(rho.mat));
    CHECK(is_psd_exact(rho_plus(g).mat));
  }
}
