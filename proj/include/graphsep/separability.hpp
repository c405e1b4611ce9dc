#ifndef GRAPHSEP_SEPARABILITY_HPP
#define GRAPHSEP_SEPARABILITY_HPP

#include "graphsep/density.hpp"
#include "graphsep/graph.hpp"
#include "graphsep/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphsep {

/// Unnormalized product pure state |a> (x) |b> (x) |c> with integer
/// coefficients, so its normalized projector has exactly rational entries.
struct PureProductState {
  std::vector<Int> a; // length m
  std::vector<Int> b; // length p
  std::vector<Int> c; // length q
  Int norm2_a = 0;    // squared norms, recorded at construction
  Int norm2_b = 0;
  Int norm2_c = 0;

  PureProductState(std::vector<Int> va, std::vector<Int> vb, std::vector<Int> vc);
};

/// Projector onto the normalized state, order m*p*q. Entry
/// [(x,y,z),(x',y',z')] = a_x a_x' b_y b_y' c_z c_z' / (|a|^2 |b|^2 |c|^2).
RatMatrix projector(const PureProductState& s);

struct WeightedTerm {
  Rational weight;
  PureProductState state;
};

/// Convex combination of product projectors certifying separability:
/// weights positive, summing to 1, reproducing the target density exactly.
struct SeparableDecomposition {
  std::vector<WeightedTerm> terms;

  Rational weight_sum() const;
};

struct NptWitness {
  Subsystem subsystem;
  CharPoly evidence;      // char poly of the failing partial transpose
  double min_eig_approx;  // float estimate, reporting only
};

enum class VerdictKind { Separable, NPT, Inconclusive };

struct Verdict {
  VerdictKind kind;
  std::optional<SeparableDecomposition> decomposition; // Separable
  std::optional<NptWitness> witness;                   // NPT
  std::string reason;                                  // Inconclusive

  static Verdict separable(SeparableDecomposition d);
  static Verdict npt(NptWitness w);
  static Verdict inconclusive(std::string reason);
};

/// Raised by the orbit decomposition when an edge's required partner is
/// absent. Unreachable for nearest point graphs satisfying the degree
/// condition; surfacing it guards that claim.
class OrbitPairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Peres test with exact evidence: NPT with a witness if some partial
/// transpose fails the exact PSD check, otherwise Inconclusive("PPT")
/// (PPT alone certifies nothing).
Verdict ppt_test(const DensityMatrix& rho);

/// Separable decomposition of the four-edge mixture sigma on the quadruple
/// {ijk,rst},{rjk,ist},{isk,rjt},{ijt,rsk}: four product terms of weight
/// 1/4 whose sign patterns (s_u, s_v, s_w) multiply to -1. Requires
/// i != r, j != s, k != t.
SeparableDecomposition decompose_quadruple(VertexCoord first, VertexCoord second,
                                           TripartiteDims dims);

/// Constructive decomposition for graphs satisfying the degree condition.
/// Partitions the edges into orbits: one-coordinate edges stand alone,
/// two-coordinate edges pair with their coordinate-swap partner,
/// three-coordinate edges form quadruples. Throws std::domain_error if the
/// degree condition fails, OrbitPairingError if a partner edge is missing.
SeparableDecomposition decompose_by_edge_orbits(const Graph& g);

/// Decomposition of rho(G1 (x) G2 (x) G3): four sign-pattern terms per
/// factor-edge triple, 4|E1||E2||E3| terms in total.
SeparableDecomposition decompose_tensor_product(const Graph& g1, const Graph& g2,
                                                const Graph& g3);

/// Entanglement witness for the star graph K_{1,n-1} on n = mpq >= 8,
/// m, p, q >= 2: local 2-dim projections restrict rho to an 8-dim block
/// whose A-partial transpose has characteristic polynomial
/// (l - 1/(2(n-1)))^5 * cubic with exactly one negative root.
struct StarWitness {
  int n;
  TripartiteDims dims;
  CharPoly restricted_char_poly; // degree 8, of the restricted T_A block
  Rational repeated_root;        // 1/(2(n-1))
  int repeated_multiplicity;     // 5
  CharPoly cubic;                // the cubic factor carrying the negative root
  Rational root_product;         // product of the cubic's roots, negative
  int negative_roots;            // of the cubic, exactly 1
};

StarWitness star_witness(int n, TripartiteDims dims);

/// Exact certificate check: weights positive and summing to 1, reconstruction
/// matches rho entrywise. Returns the first failure description, or nullopt
/// when the certificate is valid. Throws std::invalid_argument when vector
/// lengths don't match dims.
std::optional<std::string> check_decomposition(const DensityMatrix& rho,
                                               const SeparableDecomposition& d);
bool verify_decomposition(const DensityMatrix& rho, const SeparableDecomposition& d);

/// Full decision procedure. Degree condition fails: run the exact PPT test
/// and return NPT with a witness, or Inconclusive when all transposes are
/// PSD. Degree condition holds: construct and verify an orbit decomposition,
/// returning Separable, or Inconclusive with diagnostics when pairing fails.
/// Both routes produce checkable certificates; neither leans on the asserted
/// degree/PPT equivalence.
Verdict classify(const Graph& g);

} // namespace graphsep

#endif
