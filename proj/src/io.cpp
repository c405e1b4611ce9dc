#include "graphsep/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace graphsep {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string t;
  while (is >> t) tokens.push_back(t);
  return tokens;
}

int parse_int(const std::string& token, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                     token + "'");
  }
}

// min_eig_approx is an estimate; 12 significant digits keep the JSON stable
// without suggesting exactness.
double round_12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

} // namespace

Graph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  bool have_dims = false;
  TripartiteDims dims;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(is, raw)) {
    ++line_no;
    const auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];

    if (kind == "dims") {
      if (have_dims) throw ParseError("line " + std::to_string(line_no) + ": repeated dims line");
      if (tokens.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'dims M P Q'");
      }
      dims.m = parse_int(tokens[1], line_no, "dimension");
      dims.p = parse_int(tokens[2], line_no, "dimension");
      dims.q = parse_int(tokens[3], line_no, "dimension");
      if (dims.m < 1 || dims.p < 1 || dims.q < 1) {
        throw ParseError("line " + std::to_string(line_no) + ": dims must be positive");
      }
      have_dims = true;
      continue;
    }

    if (!have_dims) {
      throw ParseError("line " + std::to_string(line_no) + ": dims line must come first");
    }

    int a = 0, b = 0;
    if (kind == "edge") {
      if (tokens.size() != 7) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'edge I J K  R S T'");
      }
      VertexCoord u{parse_int(tokens[1], line_no, "coordinate"),
                    parse_int(tokens[2], line_no, "coordinate"),
                    parse_int(tokens[3], line_no, "coordinate")};
      VertexCoord v{parse_int(tokens[4], line_no, "coordinate"),
                    parse_int(tokens[5], line_no, "coordinate"),
                    parse_int(tokens[6], line_no, "coordinate")};
      try {
        a = vertex_index(u, dims);
        b = vertex_index(v, dims);
      } catch (const std::out_of_range&) {
        throw ParseError("line " + std::to_string(line_no) + ": coordinate outside dims");
      }
    } else if (kind == "e") {
      if (tokens.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'e A B'");
      }
      a = parse_int(tokens[1], line_no, "vertex index");
      b = parse_int(tokens[2], line_no, "vertex index");
      if (a < 1 || a > dims.order() || b < 1 || b > dims.order()) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index outside 1.." +
                         std::to_string(dims.order()));
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + kind + "'");
    }

    if (a == b) {
      throw ParseError("line " + std::to_string(line_no) + ": loop edge {" +
                       std::to_string(a) + ", " + std::to_string(b) + "} not allowed");
    }
    const Edge e(a, b);
    if (!seen.insert(e).second) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge {" +
                            std::to_string(e.a) + ", " + std::to_string(e.b) + "} ignored");
      }
      continue;
    }
    edges.push_back(e);
  }

  if (!have_dims) throw ParseError("missing dims line");
  return Graph(dims, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  const TripartiteDims d = g.dims();
  os << "dims " << d.m << " " << d.p << " " << d.q << "\n";
  for (const Edge& e : g.edges()) {
    const VertexCoord u = vertex_coord(e.a, d);
    const VertexCoord v = vertex_coord(e.b, d);
    os << "edge " << u.i << " " << u.j << " " << u.k << "  " << v.i << " " << v.j << " "
       << v.k << "\n";
  }
  return os.str();
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["dims"] = {g.dims().m, g.dims().p, g.dims().q};
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  const auto& d = j.at("dims");
  TripartiteDims dims{d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()};
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(dims, edges);
}

Json matrix_to_json(const RatMatrix& m, TripartiteDims dims) {
  Json j;
  j["dims"] = {dims.m, dims.p, dims.q};
  j["order"] = m.order();
  Json entries = Json::array();
  for (int r = 0; r < m.order(); ++r)
    for (int c = 0; c < m.order(); ++c) entries.push_back(rat_to_string(m.at(r, c)));
  j["entries"] = std::move(entries);
  return j;
}

Json degree_report_to_json(const DegreeReport& r) {
  Json j;
  j["holds"] = r.holds;
  Json mm;
  for (Subsystem sub : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    Json list = Json::array();
    for (const auto& m : r.mismatches[static_cast<int>(sub)]) {
      Json item;
      item["vertex"] = m.vertex;
      item["degree_g"] = m.degree_g;
      item["degree_transposed"] = m.degree_pt;
      list.push_back(std::move(item));
    }
    mm[subsystem_name(sub)] = std::move(list);
  }
  j["mismatches"] = std::move(mm);
  return j;
}

namespace {

Json int_vector_to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

std::vector<Int> int_vector_from_json(const Json& j) {
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(Int(x.get<long long>()));
  return out;
}

} // namespace

Json decomposition_to_json(const SeparableDecomposition& d) {
  Json out = Json::array();
  for (const auto& term : d.terms) {
    Json t;
    t["weight"] = rat_to_string(term.weight);
    t["a"] = int_vector_to_json(term.state.a);
    t["b"] = int_vector_to_json(term.state.b);
    t["c"] = int_vector_to_json(term.state.c);
    out.push_back(std::move(t));
  }
  return out;
}

SeparableDecomposition decomposition_from_json(const Json& j) {
  SeparableDecomposition d;
  for (const auto& t : j) {
    d.terms.push_back({rat_from_string(t.at("weight").get<std::string>()),
                       PureProductState(int_vector_from_json(t.at("a")),
                                        int_vector_from_json(t.at("b")),
                                        int_vector_from_json(t.at("c")))});
  }
  return d;
}

Json char_poly_to_json(const CharPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs) out.push_back(rat_to_string(c));
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  switch (v.kind) {
    case VerdictKind::Separable: {
      j["verdict"] = "separable";
      j["decomposition"] = decomposition_to_json(*v.decomposition);
      break;
    }
    case VerdictKind::NPT: {
      j["verdict"] = "npt";
      Json w;
      w["subsystem"] = subsystem_name(v.witness->subsystem);
      w["charpoly"] = char_poly_to_json(v.witness->evidence);
      w["min_eig_approx"] = round_12(v.witness->min_eig_approx);
      j["witness"] = std::move(w);
      break;
    }
    case VerdictKind::Inconclusive: {
      j["verdict"] = "inconclusive";
      j["reason"] = v.reason;
      break;
    }
  }
  return j;
}

Json star_witness_to_json(const StarWitness& w) {
  Json j;
  j["n"] = w.n;
  j["dims"] = {w.dims.m, w.dims.p, w.dims.q};
  j["charpoly"] = char_poly_to_json(w.restricted_char_poly);
  j["repeated_root"] = rat_to_string(w.repeated_root);
  j["repeated_multiplicity"] = w.repeated_multiplicity;
  j["cubic"] = char_poly_to_json(w.cubic);
  j["root_product"] = rat_to_string(w.root_product);
  j["negative_roots"] = w.negative_roots;
  j["verdict"] = "entangled";
  return j;
}

Json certificate_to_json(const Graph& g, const SeparableDecomposition& d) {
  Json j;
  j["graph"] = graph_to_json(g);
  j["decomposition"] = decomposition_to_json(d);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  return Certificate{graph_from_json(j.at("graph")),
                     decomposition_from_json(j.at("decomposition"))};
}

std::string matrix_to_text(const RatMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.order(); ++r) {
    for (int c = 0; c < m.order(); ++c) {
      if (c) os << " ";
      os << rat_to_string(m.at(r, c));
    }
    os << "\n";
  }
  return os.str();
}

std::string degree_report_to_text(const DegreeReport& r) {
  std::ostringstream os;
  os << "degree condition: " << (r.holds ? "holds" : "fails") << "\n";
  for (Subsystem sub : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    for (const auto& m : r.mismatches[static_cast<int>(sub)]) {
      os << "  " << subsystem_name(sub) << ": vertex " << m.vertex << " has degree "
         << m.degree_g << " in G, " << m.degree_pt << " after transpose\n";
    }
  }
  return os.str();
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream os;
  switch (v.kind) {
    case VerdictKind::Separable:
      os << "verdict: separable (" << v.decomposition->terms.size()
         << " product terms, weights sum " << rat_to_string(v.decomposition->weight_sum())
         << ")\n";
      break;
    case VerdictKind::NPT: {
      os << "verdict: npt (entangled)\n";
      os << "  witness: partial transpose on " << subsystem_name(v.witness->subsystem)
         << " is not PSD, min eigenvalue approx " << round_12(v.witness->min_eig_approx)
         << "\n";
      break;
    }
    case VerdictKind::Inconclusive:
      os << "verdict: inconclusive (" << v.reason << ")\n";
      break;
  }
  return os.str();
}

std::string star_witness_to_text(const StarWitness& w) {
  std::ostringstream os;
  os << "star graph on n=" << w.n << ", dims (" << w.dims.m << "," << w.dims.p << ","
     << w.dims.q << "): entangled\n";
  os << "  restricted T_A char poly has root " << rat_to_string(w.repeated_root)
     << " with multiplicity " << w.repeated_multiplicity << "\n";
  os << "  cubic factor:";
  for (const auto& c : w.cubic.coeffs) os << " " << rat_to_string(c);
  os << "\n  root product " << rat_to_string(w.root_product) << ", negative roots "
     << w.negative_roots << "\n";
  return os.str();
}

} // namespace graphsep
