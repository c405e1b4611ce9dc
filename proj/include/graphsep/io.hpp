#ifndef GRAPHSEP_IO_HPP
#define GRAPHSEP_IO_HPP

#include "graphsep/density.hpp"
#include "graphsep/graph.hpp"
#include "graphsep/separability.hpp"
#include "graphsep/transpose.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace graphsep {

// Key order is part of the output contract (golden files), so everything
// goes through ordered_json.
using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the graph text format:
///   dims M P Q
///   edge I J K  R S T      (1-based coordinates)
///   e A B                  (1-based flat indices)
/// Blank lines and '#' comments are ignored. Duplicate edges are dropped
/// with a warning appended to `warnings` (when given). Loops, out-of-range
/// vertices and malformed lines raise ParseError with the line number.
Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Canonical writer: dims line plus one coordinate-form edge line per edge
/// in canonical order. parse_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m, TripartiteDims dims);
Json degree_report_to_json(const DegreeReport& r);
Json decomposition_to_json(const SeparableDecomposition& d);
SeparableDecomposition decomposition_from_json(const Json& j);
Json char_poly_to_json(const CharPoly& p);
Json verdict_to_json(const Verdict& v);
Json star_witness_to_json(const StarWitness& w);

/// Self-contained separability certificate: the graph plus a decomposition
/// claimed to reproduce its density matrix.
Json certificate_to_json(const Graph& g, const SeparableDecomposition& d);
struct Certificate {
  Graph graph;
  SeparableDecomposition decomposition;
};
Certificate certificate_from_json(const Json& j);

// Plain-text renderers for the CLI's default output.
std::string matrix_to_text(const RatMatrix& m);
std::string degree_report_to_text(const DegreeReport& r);
std::string verdict_to_text(const Verdict& v);
std::string star_witness_to_text(const StarWitness& w);

} // namespace graphsep

#endif
