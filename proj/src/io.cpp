#include "charvar/io.hpp"

#include "charvar/errors.hpp"

#include <fstream>
#include <sstream>

namespace charvar {

namespace {

int one_based(const Json& j, int n, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + ": index must be an integer");
  const int v = j.get<int>();
  if (v < 1 || v > n) throw ValidationError(std::string(what) + ": index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return v - 1;
}

VertexSet index_list(const Json& j, int n, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of indices");
  VertexSet out;
  for (const auto& v : j) out.push_back(one_based(v, n, what));
  return out;
}

Json index_list_to_json(const VertexSet& x) {
  Json a = Json::array();
  for (int i : x) a.push_back(i + 1);
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError("scalar must be a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("bad rational: ") + e.what());
  }
}

}  // namespace

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_object()) return ExactScalar(rational_from(j));
  const int m = int_field(j, "order");
  if (m < 1) throw ValidationError("cyclotomic order must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.push_back(rational_from(c));
  return ExactScalar(static_cast<unsigned>(m), std::move(coeffs));
}

Json scalar_to_json(const ExactScalar& x) {
  if (x.is_rational()) return to_string(x.to_rational());
  Json c = Json::array();
  for (const auto& q : x.coeffs()) c.push_back(to_string(q));
  return Json{{"order", x.order()}, {"coeffs", c}};
}

std::vector<ExactScalar> point_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("point must be an array of scalars");
  std::vector<ExactScalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

std::vector<ExactScalar> point_from_text(const std::string& text) {
  std::vector<ExactScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scalar_from_json(Json(item)));
  if (out.empty()) throw ValidationError("empty point");
  return out;
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement arr;
  const std::string flavor = field(j, "flavor").get<std::string>();
  if (flavor == "affine2")
    arr.flavor = Flavor::affine2;
  else if (flavor == "central3")
    arr.flavor = Flavor::central3;
  else
    throw ValidationError("flavor must be \"affine2\" or \"central3\"");
  for (const auto& h : field(j, "hyperplanes")) {
    if (!h.is_array() || h.size() != 3) throw ValidationError("a hyperplane is a list of three scalars");
    arr.hyperplanes.push_back({{scalar_from_json(h[0]), scalar_from_json(h[1]), scalar_from_json(h[2])}});
  }
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) arr.labels.push_back(l.get<std::string>());
    if (arr.labels.size() != arr.hyperplanes.size()) throw ValidationError("one label per hyperplane");
  }
  return arr;
}

Json arrangement_to_json(const Arrangement& arr) {
  Json h = Json::array();
  for (const auto& p : arr.hyperplanes)
    h.push_back(Json::array({scalar_to_json(p.coeffs[0]), scalar_to_json(p.coeffs[1]), scalar_to_json(p.coeffs[2])}));
  Json j{{"flavor", arr.flavor == Flavor::affine2 ? "affine2" : "central3"}, {"hyperplanes", h}};
  if (!arr.labels.empty()) j["labels"] = arr.labels;
  return j;
}

Lattice2 lattice_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 0) throw ValidationError("n must be non-negative");
  std::vector<VertexSet> flats, parallel;
  for (const auto& x : field(j, "flats")) flats.push_back(index_list(x, n, "flat"));
  if (j.contains("parallel"))
    for (const auto& x : j.at("parallel")) parallel.push_back(index_list(x, n, "parallel class"));
  for (const auto& x : flats)
    if (x.size() < 3) throw ValidationError("stored flats need at least three hyperplanes");
  return make_lattice(n, std::move(flats), std::move(parallel));
}

Json lattice_to_json(const Lattice2& lat) {
  Json flats = Json::array();
  for (const auto& x : lat.flats) flats.push_back(index_list_to_json(x));
  Json j{{"n", lat.n}, {"flats", flats}};
  if (!lat.parallel.empty()) {
    Json p = Json::array();
    for (const auto& x : lat.parallel) p.push_back(index_list_to_json(x));
    j["parallel"] = p;
  }
  return j;
}

ArrangementInput input_from_json(const Json& j) {
  ArrangementInput in;
  const bool geometry = j.is_object() && j.contains("hyperplanes");
  const bool lattice = j.is_object() && j.contains("flats");
  if (!geometry && !lattice) throw ValidationError("input has neither \"hyperplanes\" nor \"flats\"");
  if (geometry) {
    in.arrangement = arrangement_from_json(j);
    in.lattice = lattice_of(*in.arrangement);
  }
  if (lattice) {
    const Lattice2 given = lattice_from_json(j);
    if (geometry && !(given == in.lattice)) throw ValidationError("lattice does not match the hyperplanes");
    in.lattice = given;
  }
  return in;
}

Json fixture_to_json(const Fixture& f) {
  Json j{{"name", f.name}};
  if (f.arrangement) j.update(arrangement_to_json(*f.arrangement));
  if (!f.labels.empty()) j["labels"] = f.labels;
  j.update(lattice_to_json(f.lattice));
  return j;
}

Json component_to_json(const SubspaceComponent& c) {
  Json eqs = Json::array();
  for (Index r = 0; r < c.equations.rows(); ++r) {
    Json row = Json::array();
    for (Index k = 0; k < c.equations.cols(); ++k) row.push_back(to_string(c.equations(r, k)));
    eqs.push_back(row);
  }
  Json j{{"kind", c.kind == ComponentKind::local ? "local" : "nonlocal"},
         {"support", index_list_to_json(c.support)},
         {"dimension", c.dimension()},
         {"linear_equations", eqs},
         {"monomial_equations", exponentiate(c).monomial_equations()}};
  if (c.kind == ComponentKind::nonlocal) {
    Json p = Json::array();
    for (const auto& b : c.partition.blocks) p.push_back(index_list_to_json(b));
    j["partition"] = p;
  }
  j["verified"] = c.verified;
  return j;
}

MonodromyInput monodromy_from_json(const Json& j) {
  MonodromyInput m;
  m.n = int_field(j, "n");
  if (m.n < 1) throw ValidationError("n must be positive");
  for (const auto& g : field(j, "generators")) {
    MonodromyGen gen;
    gen.x = index_list(field(g, "X"), m.n, "vertex set");
    if (g.contains("delta")) {
      for (const auto& f : g.at("delta")) {
        if (!f.is_array() || f.empty() || !f[0].is_string()) throw ValidationError("bad delta factor");
        const std::string kind = f[0].get<std::string>();
        if (kind == "A" && f.size() == 4) {
          const int a = one_based(f[1], m.n, "delta"), b = one_based(f[2], m.n, "delta");
          if (a >= b) throw ValidationError("A factor needs i < j");
          gen.delta.factors.push_back(BraidFactor::A(a, b, f[3].get<int>()));
        } else if (kind == "s" && f.size() == 3) {
          const int a = one_based(f[1], m.n - 1, "delta");
          gen.delta.factors.push_back(BraidFactor::sigma(a, f[2].get<int>()));
        } else {
          throw ValidationError("delta factor must be [\"A\", i, j, exp] or [\"s\", i, exp]");
        }
      }
    }
    gen.delta.validate(m.n);
    m.generators.push_back(std::move(gen));
  }
  if (j.contains("labels")) m.labels = index_list(j.at("labels"), m.n, "labels");
  monodromy_lattice(m);
  return m;
}

Json monodromy_to_json(const MonodromyInput& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators) {
    Json d = Json::array();
    for (const auto& f : g.delta.factors) {
      if (f.kind == BraidFactor::Kind::pure)
        d.push_back(Json::array({"A", f.i + 1, f.j + 1, f.exp}));
      else
        d.push_back(Json::array({"s", f.i + 1, f.exp}));
    }
    gens.push_back(Json{{"X", index_list_to_json(g.x)}, {"delta", d}});
  }
  Json j{{"n", m.n}};
  if (!m.labels.empty()) j["labels"] = index_list_to_json(m.labels);
  j["generators"] = gens;
  return j;
}

MembershipQuery query_from_json(const Json& j) {
  MembershipQuery q;
  q.point = point_from_json(field(j, "point"));
  q.k = j.contains("k") ? int_field(j, "k") : 1;
  return q;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace charvar
