#include "acceptance.hpp"

#include "charvar/alexander.hpp"
#include "charvar/arrangement.hpp"
#include "charvar/components.hpp"
#include "charvar/errors.hpp"
#include "charvar/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace charvar;

namespace {

struct Output {
  std::string path;
  std::string format = "json";

  void add_to(CLI::App* cmd) {
    cmd->add_option("-o,--output", path, "Output file (default: stdout)");
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }
  bool text() const { return format == "text"; }

  void write(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << body;
  }
  void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

// A file holds one arrangement/lattice object or an array of them (falk_pair).
std::vector<Fixture> read_fixtures(const std::string& path) {
  const Json j = read_json_file(path);
  std::vector<Fixture> out;
  auto add = [&](const Json& item, std::size_t index) {
    const ArrangementInput in = input_from_json(item);
    Fixture f;
    f.name = item.contains("name") ? item.at("name").get<std::string>() : path + (j.is_array() ? "[" + std::to_string(index + 1) + "]" : "");
    f.arrangement = in.arrangement;
    f.lattice = in.lattice;
    out.push_back(std::move(f));
  };
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) add(j[i], i);
    if (out.empty()) throw ValidationError(path + ": empty fixture list");
  } else {
    add(j, 0);
  }
  return out;
}

std::string lattice_text(const Fixture& f) {
  std::ostringstream os;
  os << f.name << ": n = " << f.lattice.n << ", b2 = " << b2(f.lattice) << ", flats";
  if (f.lattice.flats.empty()) os << " (none)";
  for (const auto& x : f.lattice.flats) os << ' ' << flat_to_string(x);
  if (!f.lattice.parallel.empty()) {
    os << ", parallel";
    for (const auto& x : f.lattice.parallel) os << ' ' << flat_to_string(x);
  }
  return os.str() + "\n";
}

Json lattice_summary(const Fixture& f) {
  Json j{{"name", f.name}};
  j.update(lattice_to_json(f.lattice));
  j["b2"] = b2(f.lattice);
  j["double_points"] = static_cast<long>(all_flats(f.lattice).size() - f.lattice.flats.size());
  return j;
}

// gen ---------------------------------------------------------------------

struct GenArgs {
  FamilySpec spec;
  bool monodromy = false;
  Output out;
};

void cmd_gen(const GenArgs& a) {
  if (a.monodromy) {
    MonodromyInput m;
    if (a.spec.name == "diamond")
      m = acceptance::diamond_deconed_monodromy();
    else if (a.spec.name == "pencil")
      m = pencil_monodromy(a.spec.n);
    else if (a.spec.name == "generic")
      m = generic_monodromy(a.spec.n);
    else
      throw ValidationError("--monodromy is available for diamond, pencil and generic");
    if (a.out.text()) {
      std::ostringstream os;
      os << "n = " << m.n << ", " << m.generators.size() << " generators\n";
      for (const auto& g : m.generators) os << "  X = " << flat_to_string(g.x) << ", |delta| = " << g.delta.size() << "\n";
      a.out.write(os.str());
    } else {
      a.out.write(monodromy_to_json(m));
    }
    return;
  }
  const auto fixtures = gen_family(a.spec);
  if (a.out.text()) {
    std::string s;
    for (const auto& f : fixtures) s += lattice_text(f);
    a.out.write(s);
    return;
  }
  if (fixtures.size() == 1) {
    a.out.write(fixture_to_json(fixtures.front()));
    return;
  }
  Json arr = Json::array();
  for (const auto& f : fixtures) arr.push_back(fixture_to_json(f));
  a.out.write(arr);
}

// lattice -----------------------------------------------------------------

void cmd_lattice(const std::string& input, const Output& out) {
  const auto fixtures = read_fixtures(input);
  if (out.text()) {
    std::string s;
    for (const auto& f : fixtures) s += lattice_text(f);
    out.write(s);
    return;
  }
  if (fixtures.size() == 1) {
    out.write(lattice_summary(fixtures.front()));
    return;
  }
  Json arr = Json::array();
  for (const auto& f : fixtures) arr.push_back(lattice_summary(f));
  out.write(arr);
}

// components --------------------------------------------------------------

struct ComponentsArgs {
  std::string input;
  int k = 1;
  EnumerationOptions enumeration;
  Output out;
};

std::string partition_string(const Partition& p) {
  std::string s;
  for (const auto& b : p.blocks) s += flat_to_string(b);
  return s;
}

void cmd_components(const ComponentsArgs& a) {
  if (a.k != 1)
    throw ValidationError("components enumerates V_1 / R^1 only; for k >= 2 query single points with `member --k`");
  const auto fixtures = read_fixtures(a.input);
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& f : fixtures) {
    const EnumerationResult res = enumerate_first_resonance(f.lattice, a.enumeration);
    const std::string census = acceptance::census(res);
    if (a.out.text()) {
      text << f.name << ": " << census << "\n";
      for (const auto& c : res.components) {
        text << "  " << (c.kind == ComponentKind::local ? "local " + flat_to_string(c.support) : "nonlocal " + partition_string(c.partition))
             << ", dim " << c.dimension() << ":";
        for (const auto& e : exponentiate(c).monomial_equations()) text << ' ' << e;
        text << "\n";
      }
      for (const auto& [s, rep] : res.flagged)
        text << "  flagged " << partition_string(s.partition) << ", dim " << s.dimension() << " (form does not vanish)\n";
      continue;
    }
    Json comps = Json::array();
    for (const auto& c : res.components) comps.push_back(component_to_json(c));
    Json flagged = Json::array();
    for (const auto& [s, rep] : res.flagged) {
      Json p = Json::array();
      for (const auto& b : s.partition.blocks) {
        Json block = Json::array();
        for (int i : b) block.push_back(i + 1);
        p.push_back(block);
      }
      flagged.push_back(Json{{"partition", p}, {"dimension", s.dimension()}, {"failing_pairs", rep.failing_pairs.size()}});
    }
    arr.push_back(Json{{"name", f.name},
                       {"n", f.lattice.n},
                       {"k", 1},
                       {"census", census},
                       {"components", comps},
                       {"flagged", flagged},
                       {"supports_scanned", res.supports_scanned},
                       {"partitions_tested", res.partitions_tested}});
  }
  if (a.out.text())
    a.out.write(text.str());
  else
    a.out.write(arr.size() == 1 ? arr[0] : arr);
}

// member ------------------------------------------------------------------

struct MemberArgs {
  std::string input;
  std::string lattice;
  std::string point;
  std::string query;
  std::optional<int> k;
  EnumerationOptions enumeration;
  Output out;
};

bool is_one(const std::vector<ExactScalar>& t) {
  return std::all_of(t.begin(), t.end(), [](const ExactScalar& x) { return x.is_one(); });
}

bool on_torus(const TorusComponent& tor, const std::vector<ExactScalar>& t) {
  for (Index r = 0; r < tor.equations.rows(); ++r) {
    ExactScalar v(1);
    for (int i = 0; i < tor.n; ++i)
      if (tor.equations(r, i) != 0) v *= t[static_cast<std::size_t>(i)].pow(static_cast<long>(tor.equations(r, i)));
    if (!v.is_one()) return false;
  }
  return true;
}

// Positive-dimensional components of V_1 through 1: exp of the components of
// R^1. Returns the number of them containing t.
Json resonance_criterion(const Lattice2& lat, const std::vector<ExactScalar>& t, const EnumerationOptions& opt) {
  const EnumerationResult res = enumerate_first_resonance(lat, opt);
  long hits = 0;
  for (const auto& c : res.components) hits += on_torus(exponentiate(c), t);
  return Json{{"components", res.components.size()}, {"containing", hits}, {"holds", hits > 0}};
}

void cmd_member(const MemberArgs& a) {
  if (a.point.empty() == a.query.empty()) throw ValidationError("give exactly one of --point and --query");
  MembershipQuery q;
  if (!a.point.empty())
    q.point = point_from_text(a.point);
  else
    q = query_from_json(read_json_file(a.query));
  if (a.k) q.k = *a.k;
  for (const auto& x : q.point)
    if (x.is_zero()) throw ValidationError("membership point must lie in the torus");

  const Json in = read_json_file(a.input);
  std::optional<Lattice2> lat;
  if (!a.lattice.empty()) lat = read_fixtures(a.lattice).front().lattice;

  Json j{{"k", q.k}};
  Json pt = Json::array();
  for (const auto& x : q.point) pt.push_back(scalar_to_json(x));
  j["point"] = pt;
  Json criteria = Json::object();
  bool consistent = true;

  if (in.is_object() && in.contains("generators")) {
    const MonodromyInput m = monodromy_from_json(in);
    std::vector<ExactScalar> t = q.point;
    if (static_cast<int>(t.size()) == m.n + 1) {
      t = decone_membership_point(t);
      j["deconed"] = true;
    }
    const AlexanderPresentation ap(m);
    const Membership mem = ap.membership(t, q.k);
    const long h1 = m.n - static_cast<long>(mem.rank_partial2) - (is_one(t) ? 0 : 1);
    j["in_Vk"] = mem.in_vk;
    j["rank"] = mem.rank_delta;
    criteria["delta"] = Json{{"rank", mem.rank_delta}, {"bound", Index(m.n) * (m.n - 1) / 2 - q.k}, {"holds", mem.delta}};
    criteria["partial2"] = Json{{"rank", mem.rank_partial2}, {"h1", h1}, {"holds", mem.partial2}};
    j["comparable"] = mem.comparable;
    j["range_N"] = mem.range_n;
    consistent = mem.agree || !mem.comparable;
    if (lat && q.k == 1 && lat->parallel.empty()) {
      std::vector<ExactScalar> lt = q.point;
      if (lat->n == m.n + 1 && static_cast<int>(lt.size()) == m.n) lt = lift_membership_point(lt);
      if (lat->n != static_cast<int>(lt.size())) throw ValidationError("lattice and point sizes differ");
      criteria["resonance"] = resonance_criterion(*lat, lt, a.enumeration);
      if (criteria["resonance"]["holds"].get<bool>() && !mem.in_vk) consistent = false;
    }
  } else {
    const Lattice2 l = read_fixtures(a.input).front().lattice;
    if (q.k != 1) throw ValidationError("membership in V_k for k >= 2 needs a braid monodromy file");
    if (static_cast<int>(q.point.size()) != l.n) throw ValidationError("point has the wrong length");
    const Json res = resonance_criterion(l, q.point, a.enumeration);
    criteria["resonance"] = res;
    j["in_Vk"] = res["holds"];
    j["note"] = "resonance criterion only: components of V_1 through 1";
  }
  j["criteria"] = criteria;
  j["consistent"] = consistent;

  if (a.out.text()) {
    std::ostringstream os;
    os << "in V_" << q.k << ": " << (j["in_Vk"].get<bool>() ? "yes" : "no");
    if (j.contains("rank")) os << " (rank Delta " << j["rank"].get<long>() << ", h1 " << criteria["partial2"]["h1"].get<long>() << ")";
    if (criteria.contains("resonance"))
      os << ", on " << criteria["resonance"]["containing"].get<long>() << " of " << criteria["resonance"]["components"].get<long>()
         << " exponentiated resonance components";
    if (!consistent) os << ", CRITERIA DISAGREE";
    a.out.write(os.str() + "\n");
  } else {
    a.out.write(j);
  }
}

// report ------------------------------------------------------------------

struct ReportArgs {
  std::vector<std::string> inputs;
  std::vector<int> criteria;
  acceptance::Options options;
  Output out;
};

int cmd_report(const ReportArgs& a) {
  std::vector<int> ids = a.criteria;
  if (ids.empty())
    for (int i = 1; i <= acceptance::criterion_count; ++i) ids.push_back(i);
  std::vector<acceptance::Invariants> extra;
  for (const auto& path : a.inputs)
    for (const auto& f : read_fixtures(path)) extra.push_back(acceptance::invariants(f.name, f.lattice, 100, a.options.seed));
  bool all = true;
  Json crit = Json::array(), fixtures = Json::array();
  std::ostringstream text;
  for (int id : ids) {
    const auto o = acceptance::run(id, a.options);
    all = all && o.pass;
    crit.push_back(Json{{"id", o.id}, {"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
    text << (o.pass ? "PASS " : "FAIL ") << o.id << ". " << o.name << ": " << o.detail << "\n";
  }
  for (const auto& inv : extra) {
    all = all && inv.pass;
    fixtures.push_back(Json{{"name", inv.name},
                            {"n", inv.n},
                            {"b2", inv.b2},
                            {"rank_phi_one", inv.rank_phi_one},
                            {"transpose_checked", inv.transpose_checked},
                            {"transpose_failed", inv.transpose_failed},
                            {"pass", inv.pass}});
    text << (inv.pass ? "PASS " : "FAIL ") << inv.name << ": rank Phi(1) = " << inv.rank_phi_one << ", b2 = " << inv.b2
         << ", transpose identity " << inv.transpose_checked - inv.transpose_failed << "/" << inv.transpose_checked << "\n";
  }
  text << (all ? "all checks passed" : "some checks failed") << "\n";
  if (a.out.text())
    a.out.write(text.str());
  else
    a.out.write(Json{{"seed", a.options.seed}, {"criteria", crit}, {"fixtures", fixtures}, {"pass", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance and characteristic varieties of hyperplane arrangements"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an arrangement family as JSON");
  g->add_option("--family", gen.spec.name, "braid, monomial, full_monomial, diamond, hessian, falk_pair, pencil, generic")->required();
  g->add_option("--r", gen.spec.r, "monomial order r");
  g->add_option("--l", gen.spec.l, "rank l (braid, monomial)");
  g->add_option("--n", gen.spec.n, "number of lines (pencil, generic)");
  g->add_flag("--monodromy", gen.monodromy, "emit braid monodromy instead (diamond, pencil, generic)");
  gen.out.add_to(g);

  std::string lattice_input;
  Output lattice_out;
  auto* l = app.add_subcommand("lattice", "Rank-two lattice of an arrangement file");
  l->add_option("input", lattice_input, "arrangement or lattice JSON")->required();
  lattice_out.add_to(l);

  ComponentsArgs comp;
  auto* c = app.add_subcommand("components", "Components of R^1 and their tori in V_1");
  c->add_option("input", comp.input, "arrangement or lattice JSON")->required();
  c->add_option("--k", comp.k, "depth (only 1 is enumerated)");
  c->add_option("--cap", comp.enumeration.cap, "largest number of hyperplanes enumerated");
  c->add_option("--samples", comp.enumeration.samples, "verification points per component");
  c->add_option("--seed", comp.enumeration.seed, "random seed");
  comp.out.add_to(c);

  MemberArgs mem;
  auto* m = app.add_subcommand("member", "Is a point of the torus in V_k?");
  m->add_option("input", mem.input, "braid monodromy JSON, or an arrangement JSON (k = 1 only)")->required();
  m->add_option("--lattice", mem.lattice, "arrangement JSON for the resonance criterion");
  m->add_option("--point", mem.point, "comma-separated rationals, e.g. -1,1,1/2");
  m->add_option("--query", mem.query, "JSON file {\"point\": [...], \"k\": k}");
  m->add_option("--k", mem.k, "depth k (default 1)");
  m->add_option("--cap", mem.enumeration.cap, "enumeration cap for the resonance criterion");
  m->add_option("--samples", mem.enumeration.samples, "verification points per component");
  m->add_option("--seed", mem.enumeration.seed, "random seed");
  mem.out.add_to(m);

  ReportArgs rep;
  auto* r = app.add_subcommand("report", "Acceptance report: censuses and invariant suites");
  r->add_option("fixtures", rep.inputs, "extra arrangement/lattice files to check");
  r->add_option("--criteria", rep.criteria, "criterion numbers to run (default: all)")->delimiter(',');
  r->add_option("--seed", rep.options.seed, "random seed");
  r->add_option("--samples", rep.options.samples, "verification points per component");
  rep.out.add_to(r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*g) cmd_gen(gen);
    if (*l) cmd_lattice(lattice_input, lattice_out);
    if (*c) cmd_components(comp);
    if (*m) cmd_member(mem);
    if (*r) return cmd_report(rep);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
