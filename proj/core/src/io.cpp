#include "tropcurv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tropcurv/constants.hpp"
#include "tropcurv/errors.hpp"

namespace tropcurv {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json lattice_json(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (auto x : v.c) a.push_back(x);
  return a;
}

ordered_json lattice_list_json(const std::vector<LatticeVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(lattice_json(v));
  return a;
}

ordered_json rational_vector_json(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(rational_string(r));
  return a;
}

ordered_json approx_vector_json(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(to_double(r));
  return a;
}

ordered_json input_json_obj(const InputDocument& doc) {
  ordered_json j;
  j["ambient_dim"] = doc.poly.ambient_dim();
  ordered_json terms = ordered_json::array();
  for (const auto& [e, u] : doc.poly.terms()) {
    ordered_json t;
    t["exponent"] = lattice_json(e);
    t["coeff"] = rational_string(u);
    int s = doc.signs.has(e) ? doc.signs.at(e) : 1;
    t["sign"] = s > 0 ? "+" : "-";
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

InputDocument input_from_json(const ordered_json& j) {
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw InputError("input requires an integer \"ambient_dim\"");
  int d = j["ambient_dim"].get<int>();
  if (d < 1 || d > 16) throw InputError("ambient_dim must lie in [1, 16]");
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
    throw InputError("input requires a non-empty \"terms\" array");

  InputDocument doc;
  doc.poly = TropicalPolynomial(d);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exponent") || !t["exponent"].is_array())
      throw InputError("each term requires an \"exponent\" array");
    if (static_cast<int>(t["exponent"].size()) != d)
      throw DimensionMismatch("exponent length does not match ambient_dim");
    LatticeVector e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      if (!t["exponent"][i].is_number_integer())
        throw InputError("exponent entries must be integers");
      e[i] = t["exponent"][i].get<std::int64_t>();
    }
    if (!t.contains("coeff")) throw InputError("each term requires a \"coeff\"");
    Rational u;
    if (t["coeff"].is_string())
      u = parse_rational(t["coeff"].get<std::string>());
    else if (t["coeff"].is_number_integer())
      u = Rational(t["coeff"].get<std::int64_t>());
    else
      throw InputError("coefficients must be exact: \"p/q\" strings or integers");
    int sign = 1;
    if (t.contains("sign")) {
      const auto& s = t["sign"];
      if (s.is_string() && (s == "+" || s == "-"))
        sign = s == "+" ? 1 : -1;
      else if (s.is_number_integer() && (s.get<int>() == 1 || s.get<int>() == -1))
        sign = s.get<int>();
      else
        throw InputError("sign must be \"+\", \"-\", 1 or -1");
    }
    doc.poly.add_term(e, u);
    doc.signs.signs.emplace(e, sign);
  }
  return doc;
}

ordered_json classification_json(const Classification& c) {
  ordered_json j;
  j["generic"] = c.generic;
  j["non_singular"] = c.non_singular;
  j["primitive"] = c.primitive;
  j["all_duals_elementary"] = c.all_duals_elementary;
  return j;
}

ordered_json angle_json(const AngleMeasure& m) {
  ordered_json j;
  j["value"] = m.value;
  j["method"] = m.method == AngleMethod::exact ? "exact" : "monte_carlo";
  if (m.method == AngleMethod::monte_carlo) {
    j["stderr"] = m.stderr_;
    j["seed"] = m.seed;
    j["samples"] = m.samples;
  }
  return j;
}

ordered_json curvature_json_obj(const CurvatureReport& r) {
  ordered_json j;
  j["kind"] = "curvature";
  j["n"] = r.n;
  ordered_json k;
  k["sigma_n"] = r.constants.sigma_n;
  k["sigma_2n"] = r.constants.sigma_2n;
  k["sigma_2n_plus_1"] = r.constants.sigma_2n_plus_1;
  k["a_n"] = r.constants.a_n;
  j["constants"] = std::move(k);
  j["newton_volume"] = rational_string(r.newton_volume);
  ordered_json poly;
  poly["value"] = r.polyhedral.value;
  poly["exact"] = r.polyhedral.exact;
  poly["stderr"] = r.polyhedral.stderr_;
  j["polyhedral_total"] = std::move(poly);
  ordered_json pv = ordered_json::array();
  for (const auto& v : r.per_vertex) {
    ordered_json e;
    e["vertex"] = v.vertex;
    e["position"] = rational_vector_json(v.position);
    e["total"] = angle_json(v.total);
    e["dual_elementary"] = v.dual_elementary;
    pv.push_back(std::move(e));
  }
  j["per_vertex"] = std::move(pv);
  j["complex_total"] = r.complex_value;
  j["complex_abs"] = r.complex_abs;
  j["normalized_ratio"] = r.ratio;
  if (r.expected_non_singular)
    j["expected_non_singular"] = *r.expected_non_singular;
  else
    j["expected_non_singular"] = nullptr;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

InputDocument parse_input_json(const std::string& text) {
  return input_from_json(parse_json(text));
}

InputDocument load_input(const std::string& path) {
  ordered_json j = parse_json(read_file(path));
  if (j.is_object() && j.contains("input")) return input_from_json(j["input"]);
  return input_from_json(j);
}

std::string input_to_json(const InputDocument& doc) { return dump(input_json_obj(doc)); }

std::string to_json(const DualSubdivision& s, const InputDocument& original) {
  ordered_json j;
  j["kind"] = "dual_subdivision";
  j["input"] = input_json_obj(original);
  j["ambient_dim"] = s.ambient_dim;
  j["newton_dim"] = s.newton_dim;
  j["newton_volume"] = rational_string(s.newton_volume);
  j["classification"] = classification_json(classify(s));
  j["cell_count"] = s.cells.size();
  ordered_json cells = ordered_json::array();
  for (const auto& c : s.cells) {
    ordered_json cj;
    cj["exponents"] = lattice_list_json(c.exponents);
    cj["vertex_set"] = lattice_list_json(c.vertex_set);
    cj["dim"] = c.dim;
    cj["witness"] = rational_vector_json(c.witness);
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return dump(j);
}

std::string to_json(const HypersurfaceComplex& h) {
  ordered_json j;
  j["kind"] = "hypersurface";
  j["ambient_dim"] = h.ambient_dim;
  j["newton_dim"] = h.subdivision.newton_dim;
  j["classification"] = classification_json(classify(h.subdivision));
  ordered_json vs = ordered_json::array();
  for (const auto& v : h.vertices) {
    ordered_json vj;
    vj["position"] = rational_vector_json(v.position);
    vj["position_approx"] = approx_vector_json(v.position);
    vj["dual_cell"] = v.cell;
    vs.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vs);
  j["edges_built"] = h.edges_built;
  ordered_json es = ordered_json::array();
  for (const auto& e : h.edges) {
    ordered_json ej;
    switch (e.kind) {
      case EdgeKind::segment: ej["kind"] = "segment"; break;
      case EdgeKind::ray: ej["kind"] = "ray"; break;
      case EdgeKind::line: ej["kind"] = "line"; break;
    }
    if (e.kind == EdgeKind::segment) {
      ej["v0"] = e.v0;
      ej["v1"] = e.v1;
    } else if (e.kind == EdgeKind::ray) {
      ej["v0"] = e.v0;
      ej["direction"] = lattice_json(e.direction);
    } else {
      ej["point"] = rational_vector_json(e.point);
      ej["direction"] = lattice_json(e.direction);
    }
    ej["dual"] = lattice_list_json(e.dual);
    ej["dual_vertices"] = lattice_list_json(e.dual_vertices);
    es.push_back(std::move(ej));
  }
  j["edges"] = std::move(es);
  return dump(j);
}

std::string to_json(const RealPart& rp, const HypersurfaceComplex& h) {
  ordered_json j;
  j["kind"] = "real_part";
  j["ambient_dim"] = rp.ambient_dim;
  ordered_json parts = ordered_json::array();
  std::vector<int> vertex_counts(h.vertices.size(), 0);
  for (const auto& part : rp.parts) {
    ordered_json pj;
    pj["orthant"] = part.orthant.sign_string();
    pj["code"] = part.orthant.code();
    pj["vertices"] = part.vertices;
    pj["edges"] = part.edges;
    parts.push_back(std::move(pj));
    for (int v : part.vertices) ++vertex_counts[std::size_t(v)];
  }
  j["orthants"] = std::move(parts);
  j["vertex_orthant_counts"] = vertex_counts;
  return dump(j);
}

std::string to_json(const CurvatureReport& r) { return dump(curvature_json_obj(r)); }

std::string to_json(const InequalityReport& r) {
  ordered_json j;
  j["kind"] = "inequality";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["non_singular"] = r.non_singular;
  j["equality"] = r.equality;
  j["tolerance"] = r.tolerance;
  j["margin"] = r.margin;
  j["curvature"] = curvature_json_obj(r.report);
  return dump(j);
}

std::string to_json(const PartitionReport& r) {
  ordered_json j;
  j["kind"] = "partition";
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  ordered_json cones = ordered_json::array();
  for (const auto& c : r.cones) {
    ordered_json cj;
    cj["signs"] = c.signs;
    cj["hits"] = c.hits;
    cones.push_back(std::move(cj));
  }
  j["cones"] = std::move(cones);
  j["zero_hits"] = r.zero_hits;
  j["multi_hits"] = r.multi_hits;
  j["description_mismatches"] = r.description_mismatches;
  j["passed"] = r.passed;
  return dump(j);
}

std::string to_json(const GaussBonnetReport& r) {
  ordered_json j;
  j["kind"] = "gauss_bonnet";
  j["chi"] = r.chi.str();
  j["vertex_count"] = r.vertex_count;
  j["complex_total"] = r.complex_value;
  j["expected_from_chi"] = r.expected_from_chi;
  j["residual"] = r.residual;
  j["holds"] = r.holds;
  return dump(j);
}

std::string to_json(const OrbitReport& r) {
  ordered_json j;
  j["kind"] = "orbit";
  j["num_classes"] = r.num_classes;
  j["orbit_size"] = r.orbit_size;
  j["transitive"] = r.transitive;
  j["elementary"] = r.elementary;
  return dump(j);
}

std::string to_json(const ConvergenceTable& t) {
  ordered_json j;
  j["kind"] = "convergence";
  j["target"] = t.target;
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json rj;
    rj["t"] = row.t;
    rj["grid"] = row.grid;
    rj["curvature"] = row.curvature;
    rj["target"] = row.target;
    rj["rel_error"] = row.rel_error;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string to_csv(const ConvergenceTable& t) {
  std::string out = "t,measured,target,rel_error\n";
  char buf[160];
  for (const auto& row : t.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", row.t, row.curvature,
                  row.target, row.rel_error);
    out += buf;
  }
  return out;
}

double ConstantsTable::sigma_of(int m) const {
  auto it = sigma.find(m);
  if (it == sigma.end())
    throw InputError("sigma_" + std::to_string(m) + " missing from constants table");
  return it->second;
}

ConstantsTable default_constants_table(int max_m) {
  ConstantsTable t;
  for (int m = 0; m <= max_m; ++m) t.sigma[m] = sphere_volume(m);
  return t;
}

ConstantsTable load_constants_table(const std::string& path) {
  ordered_json j = parse_json(read_file(path));
  if (!j.is_object() || !j.contains("sigma") || !j["sigma"].is_object())
    throw InputError("constants table requires a \"sigma\" object");
  ConstantsTable t;
  for (const auto& [key, value] : j["sigma"].items()) {
    int m = 0;
    try {
      m = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("sigma keys must be integers, got '" + key + "'");
    }
    if (!value.is_number()) throw InputError("sigma values must be numbers");
    t.sigma[m] = value.get<double>();
  }
  return t;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw InputError("failed writing '" + path + "'");
}

}  // namespace tropcurv
