#include "acceptance.hpp"

#include "charvar/components.hpp"
#include "charvar/errors.hpp"
#include "charvar/io.hpp"
#include "charvar/osres.hpp"
#include "charvar/zlattice.hpp"

#include "diamond_monodromy.inc"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace charvar::acceptance {

namespace {

Fixture one(const FamilySpec& spec) { return gen_family(spec).front(); }

EnumerationResult enumerate(const Lattice2& lat, const Options& opt) {
  EnumerationOptions e;
  e.samples = opt.samples;
  e.seed = opt.seed;
  return enumerate_first_resonance(lat, e);
}

long count_dim(const EnumerationResult& res, Index d) {
  return std::count_if(res.components.begin(), res.components.end(), [d](const auto& c) { return c.dimension() == d; });
}

bool all_dim(const EnumerationResult& res, Index d) { return count_dim(res, d) == static_cast<long>(res.components.size()); }

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
  for (;;) {
    const long p = num(rng);
    if (p != 0) return Rational(p, den(rng));
  }
}

std::vector<ExactScalar> random_point(std::mt19937_64& rng, int n) {
  std::vector<ExactScalar> t;
  for (int i = 0; i < n; ++i) t.emplace_back(random_nonzero(rng));
  return t;
}

std::vector<ExactScalar> torus_point(std::mt19937_64& rng, const TorusComponent& tor) {
  const IntegerMatrix ker = integer_kernel(tor.equations);
  std::vector<ExactScalar> t(static_cast<std::size_t>(tor.n), ExactScalar(1));
  for (Index r = 0; r < ker.rows(); ++r) {
    const ExactScalar base(random_nonzero(rng));
    for (int i = 0; i < tor.n; ++i) t[static_cast<std::size_t>(i)] *= base.pow(static_cast<long>(ker(r, i)));
  }
  return t;
}

IntegerMatrix int_rows(int n, const std::vector<std::vector<int>>& rows) {
  IntegerMatrix m(static_cast<Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) m(static_cast<Index>(r), c) = Integer(rows[r][static_cast<std::size_t>(c)]);
  return m;
}

std::vector<ExactScalar> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

bool same_span(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  RationalMatrix ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  const Index r = rank(ab);
  return r == rank(a) && r == rank(b);
}

// Matches two lists of tori as sets.
bool same_tori(const std::vector<TorusComponent>& a, const std::vector<TorusComponent>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const auto& y) { return same_torus(x, y); })) return false;
  for (const auto& y : b)
    if (std::none_of(a.begin(), a.end(), [&](const auto& x) { return same_torus(x, y); })) return false;
  return true;
}

TorusComponent permute_torus(const TorusComponent& t, const std::vector<int>& perm) {
  IntegerMatrix e(t.equations.rows(), t.n);
  for (Index r = 0; r < e.rows(); ++r)
    for (int i = 0; i < t.n; ++i) e(r, perm[static_cast<std::size_t>(i)]) = t.equations(r, i);
  return torus_from_equations(t.n, e);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Displayed non-local diamond tori, coordinates t1..t7.
std::vector<TorusComponent> displayed_diamond_tori() {
  return {torus_from_equations(7, int_rows(7, {{1, 0, 0, -1, 0, 0, 0},
                                               {0, 1, -1, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 1, 0, -1},
                                               {0, 0, 0, 0, 0, 1, 0},
                                               {1, 1, 0, 0, 1, 0, 0}})),
          torus_from_equations(7, int_rows(7, {{1, 0, 0, 0, -1, 0, 0},
                                               {0, 1, 0, 0, 0, -1, 0},
                                               {0, 0, 0, 1, 0, 0, -1},
                                               {0, 0, 1, 0, 0, 0, 0},
                                               {1, 1, 0, 1, 0, 0, 0}})),
          torus_from_equations(7, int_rows(7, {{1, 0, 0, 0, 0, 0, -1},
                                               {0, 0, 1, 0, 0, -1, 0},
                                               {0, 0, 0, 1, -1, 0, 0},
                                               {0, 1, 0, 0, 0, 0, 0},
                                               {1, 0, 1, 1, 0, 0, 0}}))};
}

std::vector<TorusComponent> nonlocal_tori(const EnumerationResult& res) {
  std::vector<TorusComponent> out;
  for (const auto& c : res.components)
    if (c.kind == ComponentKind::nonlocal) out.push_back(exponentiate(c));
  return out;
}

Outcome braid_census(const Options& opt) {
  Outcome o{1, "braid census", true, ""};
  std::ostringstream d;
  for (int l : {4, 5}) {
    const auto res = enumerate(one({"braid", 0, l}).lattice, opt);
    const long want = l == 4 ? 5 : 15;
    o.pass = o.pass && static_cast<long>(res.components.size()) == want && all_dim(res, 2);
    d << (l == 4 ? "" : "; ") << "braid(" << l << "): " << census(res) << " (want " << want << ", all dim 2)";
  }
  o.detail = d.str();
  return o;
}

Outcome diamond_census(const Options& opt) {
  Outcome o{2, "diamond census", false, ""};
  const auto res = enumerate(one({"diamond"}).lattice, opt);
  const auto computed = nonlocal_tori(res);
  const auto shown = displayed_diamond_tori();
  long matched = 0;
  for (const auto& s : shown) matched += std::any_of(computed.begin(), computed.end(), [&](const auto& c) { return same_torus(c, s); });
  o.pass = res.components.size() == 9 && all_dim(res, 2) && same_tori(computed, shown);
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  long relabelings = 0;
  do {
    std::vector<TorusComponent> moved;
    for (const auto& c : computed) moved.push_back(permute_torus(c, perm));
    relabelings += same_tori(moved, shown);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::ostringstream d;
  d << census(res) << "; displayed non-local tori found: " << matched << "/3; coordinate permutations carrying the computed "
    << "non-local tori onto the displayed ones: " << relabelings << " of 5040";
  o.detail = d.str();
  return o;
}

Outcome diamond_torsion(const Options& opt) {
  Outcome o{3, "diamond torsion point", false, ""};
  const AlexanderPresentation ap(diamond_deconed_monodromy());
  const auto shown_point = ints({-1, 1, 1, -1, -1, 1, -1});
  const Membership at = ap.membership(decone_membership_point(shown_point), 2);
  std::mt19937_64 rng(opt.seed);
  long inside = 0, total = 0;
  for (const auto& tor : displayed_diamond_tori())
    for (int s = 0; s < 20; ++s, ++total) inside += ap.membership(decone_membership_point(torus_point(rng, tor)), 2).in_vk;
  o.pass = at.in_vk && inside == 0;
  const auto computed_point = ints({1, -1, -1, 1, -1, -1, 1});
  const Membership alt = ap.membership(decone_membership_point(computed_point), 2);
  std::ostringstream d;
  d << "displayed point in V_2: " << yes(at.in_vk) << " (rank Delta " << at.rank_delta << ", in V_1: "
    << yes(ap.membership(decone_membership_point(shown_point), 1).in_vk) << "); random points of the displayed tori in V_2: "
    << inside << "/" << total << "; torsion point of the computed tori (1,-1,-1,1,-1,-1,1) in V_2: " << yes(alt.in_vk)
    << " (rank Delta " << alt.rank_delta << ")";
  o.detail = d.str();
  return o;
}

Outcome monomial_census(const Options& opt) {
  Outcome o{4, "monomial censuses", false, ""};
  const auto m3 = enumerate(one({"monomial", 3, 3}).lattice, opt);
  const long local3 = std::count_if(m3.components.begin(), m3.components.end(), [](const auto& c) { return c.kind == ComponentKind::local; });
  const long ess3 = std::count_if(m3.components.begin(), m3.components.end(), [](const auto& c) { return c.essential(); });
  const bool ok3 = m3.components.size() == 16 && all_dim(m3, 2) && local3 == 12 && ess3 == 4;

  const auto m4 = enumerate(one({"monomial", 4, 3}).lattice, opt);
  const long full = std::count_if(m4.components.begin(), m4.components.end(),
                                  [&](const auto& c) { return c.essential() && static_cast<int>(c.support.size()) == 12; });
  const bool ok4 = count_dim(m4, 3) == 3 && count_dim(m4, 2) == 21 && full == 1 &&
                   count_dim(m4, 3) + count_dim(m4, 2) == static_cast<long>(m4.components.size());
  o.pass = ok3 && ok4;
  std::ostringstream d;
  d << "monomial(3,3): " << census(m3) << " (want 16 of dim 2, 12 local, 4 essential): " << (ok3 ? "ok" : "mismatch")
    << "; monomial(4,3): " << census(m4) << " (want 3 of dim 3, 21 of dim 2, 1 full-support essential): "
    << (ok4 ? "ok" : "mismatch");
  o.detail = d.str();
  return o;
}

Outcome hessian(const Options& opt) {
  Outcome o{5, "Hessian three-dimensional component", false, ""};
  const Lattice2 lat = one({"hessian"}).lattice;
  // H_1, H_2, H_3 | H_00, H_12, H_21 | H_01, H_10, H_22 | H_02, H_11, H_20
  auto h = [](int i, int j) { return 3 + 3 * i + j; };
  Partition shown{{{0, 1, 2}, {h(0, 0), h(1, 2), h(2, 1)}, {h(0, 1), h(1, 0), h(2, 2)}, {h(0, 2), h(1, 1), h(2, 0)}}};
  const auto res = enumerate(lat, opt);
  const auto it = std::find_if(res.components.begin(), res.components.end(), [&](const auto& c) { return c.partition == shown; });
  const auto s = s_pi(lat, shown);
  const bool vanishes = pi_form_vanishes(shown, s).status == FormStatus::identically_zero;
  o.pass = it != res.components.end() && it->dimension() == 3 && s.dimension() == 3 && vanishes;
  std::ostringstream d;
  d << "partition enumerated: " << yes(it != res.components.end()) << "; dim S_Pi = " << s.dimension()
    << "; form identically zero: " << yes(vanishes) << "; " << census(res);
  o.detail = d.str();
  return o;
}

Outcome full_monomial(const Options&) {
  Outcome o{6, "full monomial essential torus", false, ""};
  const int r = 3;
  const Lattice2 lat = one({"full_monomial", r, 3}).lattice;
  // H_{ij}^{(k)} follows H_1, H_2, H_3, pairs (12), (13), (23), k = 1..r.
  auto hk = [&](int pair, int k) { return 3 + pair * r + k; };
  Partition pi{{{2}, {1}, {0}}};
  for (int k = 0; k < r; ++k) {
    pi.blocks[0].push_back(hk(0, k));
    pi.blocks[1].push_back(hk(1, k));
    pi.blocks[2].push_back(hk(2, k));
  }
  std::sort(pi.blocks.begin(), pi.blocks.end());
  // v1 = sum_k e_12^k - e_23^k, v2 = sum_k e_13^k - e_23^k.
  RationalMatrix want = RationalMatrix::Zero(lat.n, 2);
  for (int k = 0; k < r; ++k) {
    want(hk(0, k), 0) = 1;
    want(hk(2, k), 0) = -1;
    want(hk(1, k), 1) = 1;
    want(hk(2, k), 1) = -1;
  }
  want(2, 0) += r;
  want(0, 0) -= r;
  want(1, 1) += r;
  want(0, 1) -= r;
  const auto s = s_pi(lat, pi);
  o.pass = is_neighborly(lat, pi) && s.dimension() == 2 && same_span(s.basis, want);
  o.detail = "neighborly: " + yes(is_neighborly(lat, pi)) + "; dim S_Pi = " + std::to_string(s.dimension()) +
             "; same span as {v1 + r(e3-e1), v2 + r(e2-e1)}: " + yes(same_span(s.basis, want));
  return o;
}

Outcome anchor(const Options& opt) {
  Outcome o{7, "convention anchor", true, ""};
  std::mt19937_64 rng(opt.seed);
  long checked = 0, failed = 0;
  for (int n = 2; n <= 6; ++n) {
    const LaurentMatrix d2 = resolution_d(2, n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int size = __builtin_popcount(mask);
      if (size < 2 || size > 4) continue;
      VertexSet x;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) x.push_back(i);
      for (int c = 0; c <= 50; ++c) {
        BraidWord delta;
        const int len = c == 0 ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
        for (int f = 0; f < len; ++f) {
          int i = std::uniform_int_distribution<int>(0, n - 1)(rng), j = i;
          while (j == i) j = std::uniform_int_distribution<int>(0, n - 1)(rng);
          delta.factors.push_back(BraidFactor::A(std::min(i, j), std::max(i, j), rng() % 2 ? 1 : -1));
        }
        const MonodromyGen gen{x, delta};
        const LaurentMatrix lhs = gassner(monodromy_braid(gen, n), n) - laurent_identity(n);
        const bool ok = laurent_product(phi_gen(gen, n), d2) == lhs;
        ++checked;
        failed += !ok;
      }
    }
  }
  o.pass = failed == 0;
  o.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) +
             " generators (all X with 2 <= |X| <= 4, n <= 6, identity plus 50 random conjugators each)";
  return o;
}

std::vector<Fixture> bridge_fixtures() {
  std::vector<Fixture> out;
  for (const auto& s : std::vector<FamilySpec>{{"braid", 0, 4}, {"braid", 0, 5}, {"monomial", 2, 3}, {"monomial", 3, 3},
                                               {"monomial", 4, 3}, {"full_monomial", 2, 3}, {"full_monomial", 3, 3},
                                               {"full_monomial", 4, 3}, {"diamond"}, {"hessian"}, {"falk_pair"}})
    for (auto& f : gen_family(s)) out.push_back(std::move(f));
  for (int n = 3; n <= 6; ++n) {
    out.push_back(one({"pencil", 0, 0, n}));
    out.push_back(one({"generic", 0, 0, n}));
  }
  return out;
}

Outcome rank_bridge(const Options&) {
  Outcome o{8, "rank bridge", true, ""};
  std::ostringstream d;
  long bad = 0, total = 0;
  for (const auto& f : bridge_fixtures()) {
    const Index r = rank(phi_one<Rational>(f.lattice));
    ++total;
    if (r != b2(f.lattice)) {
      ++bad;
      d << f.name << ": rank " << r << " vs b2 " << b2(f.lattice) << "; ";
    }
  }
  std::vector<std::pair<std::string, MonodromyInput>> monodromies{{"diamond (deconed)", diamond_deconed_monodromy()}};
  for (int n = 3; n <= 6; ++n) {
    monodromies.emplace_back("pencil(" + std::to_string(n) + ")", pencil_monodromy(n));
    monodromies.emplace_back("generic(" + std::to_string(n) + ")", generic_monodromy(n));
  }
  for (const auto& [name, m] : monodromies) {
    const AlexanderPresentation ap(m);
    const std::vector<ExactScalar> one_pt(static_cast<std::size_t>(m.n), ExactScalar(1));
    const Index rp = rank(ap.phi_rows_at(one_pt)), rd = rank(ap.delta_at(one_pt));
    ++total;
    if (rp != ap.b() || rd != ap.b()) {
      ++bad;
      d << name << ": rank Phi(1) " << rp << ", rank Delta(1) " << rd << " vs b2 " << ap.b() << "; ";
    }
  }
  o.pass = bad == 0;
  d << total - bad << "/" << total << " fixtures with rank Phi(1) = b2 (lattice side and monodromy side)";
  o.detail = d.str();
  return o;
}

Outcome transpose(const Options& opt) {
  Outcome o{9, "transpose identity", true, ""};
  long checked = 0, failed = 0, fixtures = 0;
  for (const auto& f : bridge_fixtures()) {
    const Invariants inv = invariants(f.name, f.lattice, 100, opt.seed);
    checked += inv.transpose_checked;
    failed += inv.transpose_failed;
    ++fixtures;
  }
  o.pass = failed == 0;
  o.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " random lambda over " +
             std::to_string(fixtures) + " fixtures";
  return o;
}

Outcome pencil(const Options& opt) {
  Outcome o{10, "central pencil", true, ""};
  std::mt19937_64 rng(opt.seed);
  std::ostringstream d;
  for (int n : {4, 5}) {
    const AlexanderPresentation ap(pencil_monodromy(n));
    long on = 0, off = 0;
    for (int s = 0; s < 10; ++s) on += ap.membership(lift_membership_point(random_point(rng, n - 1)), n - 2).in_vk;
    for (int s = 0; s < 10;) {
      const auto t = random_point(rng, n);
      ExactScalar prod(1);
      for (const auto& x : t) prod *= x;
      if (prod.is_one()) continue;
      off += !ap.membership(t, 1).in_vk;
      ++s;
    }
    o.pass = o.pass && on == 10 && off == 10;
    d << (n == 4 ? "" : "; ") << "n = " << n << ": " << on << "/10 of prod t = 1 in V_" << n - 2 << ", " << off
      << "/10 of prod t != 1 outside V_1";
  }
  o.detail = d.str();
  return o;
}

Outcome fitting(const Options&) {
  Outcome o{11, "free-group Fitting ideals", false, ""};
  const int n = 3;
  const LaurentMatrix d3 = resolution_d(3, n);
  const auto f3 = fitting_generators(d3, 3);
  bool ok3 = f3.size() == 3;
  for (int i = 0; i < n && ok3; ++i) {
    const LaurentPoly want = LaurentPoly::variable(n, i) - LaurentPoly(n, Rational(1));
    ok3 = std::any_of(f3.begin(), f3.end(), [&](const LaurentPoly& p) { return p == want || p == -want; });
  }
  const bool ok_low = fitting_generators(d3, 1).empty() && fitting_generators(d3, 2).empty();
  o.pass = ok3 && ok_low;
  std::ostringstream d;
  d << "F_3 = (";
  for (std::size_t i = 0; i < f3.size(); ++i) d << (i ? ", " : "") << f3[i].to_string();
  d << "); F_1 = F_2 = 0: " << yes(ok_low);
  o.detail = d.str();
  return o;
}

Outcome falk(const Options& opt) {
  Outcome o{12, "Falk pair", true, ""};
  const std::vector<std::vector<VertexSet>> listed{{{0, 1, 2}, {0, 3, 4}, {2, 4, 5}, {3, 5, 6}},
                                                   {{0, 1, 2}, {0, 3, 4}, {2, 4, 5}, {0, 5, 6}}};
  const auto pair = gen_family({"falk_pair"});
  std::ostringstream d;
  for (std::size_t a = 0; a < pair.size(); ++a) {
    const auto res = enumerate(pair[a].lattice, opt);
    std::vector<VertexSet> supports;
    bool local2 = true;
    for (const auto& c : res.components) {
      local2 = local2 && c.kind == ComponentKind::local && c.dimension() == 2;
      supports.push_back(c.support);
    }
    std::sort(supports.begin(), supports.end());
    auto want = listed[a];
    std::sort(want.begin(), want.end());
    o.pass = o.pass && local2 && supports == want;
    d << (a ? "; " : "") << pair[a].name << ": " << census(res) << ", supports";
    for (const auto& s : supports) d << ' ' << flat_to_string(s);
  }
  o.pass = o.pass && pair.size() == 2;
  o.detail = d.str();
  return o;
}

}  // namespace

std::string census(const EnumerationResult& res) {
  std::ostringstream os;
  os << res.components.size() << " components";
  std::vector<Index> dims;
  for (const auto& c : res.components) dims.push_back(c.dimension());
  std::sort(dims.begin(), dims.end(), std::greater<>());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  for (Index d : dims) {
    long local = 0, nonlocal = 0;
    for (const auto& c : res.components)
      if (c.dimension() == d) (c.kind == ComponentKind::local ? local : nonlocal) += 1;
    os << ", dim " << d << ": " << local + nonlocal << " (local " << local << ", nonlocal " << nonlocal << ")";
  }
  const long essential = std::count_if(res.components.begin(), res.components.end(), [](const auto& c) { return c.essential(); });
  os << ", essential: " << essential;
  if (!res.flagged.empty()) os << ", flagged: " << res.flagged.size();
  return os.str();
}

Outcome run(int id, const Options& opt) {
  switch (id) {
    case 1: return braid_census(opt);
    case 2: return diamond_census(opt);
    case 3: return diamond_torsion(opt);
    case 4: return monomial_census(opt);
    case 5: return hessian(opt);
    case 6: return full_monomial(opt);
    case 7: return anchor(opt);
    case 8: return rank_bridge(opt);
    case 9: return transpose(opt);
    case 10: return pencil(opt);
    case 11: return fitting(opt);
    case 12: return falk(opt);
    default: throw ValidationError("no acceptance criterion " + std::to_string(id));
  }
}

MonodromyInput diamond_deconed_monodromy() { return monodromy_from_json(Json::parse(diamond_monodromy_json)); }

Invariants invariants(const std::string& name, const Lattice2& lat, int samples, std::uint64_t seed) {
  Invariants inv;
  inv.name = name;
  inv.n = lat.n;
  inv.b2 = b2(lat);
  const ResonanceTester<Rational> res(lat);
  inv.rank_phi_one = rank(res.phi());
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    RationalVector lambda(lat.n);
    for (int i = 0; i < lat.n; ++i) lambda(i) = rng() % 4 == 0 ? Rational(0) : random_nonzero(rng);
    if (s % 2 == 1 && !lat.flats.empty()) {
      // A point of a local component: supported on a flat, summing to zero.
      const VertexSet& x = lat.flats[rng() % lat.flats.size()];
      lambda.setZero();
      Rational sum(0);
      for (std::size_t a = 0; a + 1 < x.size(); ++a) sum += lambda(x[a]) = random_nonzero(rng);
      lambda(x.back()) = -sum;
    }
    ++inv.transpose_checked;
    inv.transpose_failed += !res.os_phi_transpose_check(lambda);
  }
  inv.pass = inv.rank_phi_one == inv.b2 && inv.transpose_failed == 0;
  return inv;
}

}  // namespace charvar::acceptance
