#include <doctest.h>

#include "charvar/osres.hpp"
#include "test_support.hpp"

#include <set>

using namespace charvar;
using charvar::testing::random_nonzero_rational;
using charvar::testing::random_rational;

namespace {

Fixture one(FamilySpec spec) { return gen_family(spec).front(); }

Lattice2 deconed_diamond() { return lattice_from_affine(decone(*one({"diamond"}).arrangement).affine); }

std::vector<Lattice2> fixture_lattices() {
  std::vector<Lattice2> out;
  for (const auto& s : std::vector<FamilySpec>{{"braid", 0, 4},
                                               {"braid", 0, 5},
                                               {"monomial", 2, 3},
                                               {"monomial", 3, 3},
                                               {"full_monomial", 2, 3},
                                               {"diamond"},
                                               {"hessian"},
                                               {"falk_pair"},
                                               {"pencil", 0, 0, 5},
                                               {"generic", 0, 0, 5}})
    for (const auto& f : gen_family(s)) out.push_back(f.lattice);
  out.push_back(deconed_diamond());
  return out;
}

RationalVector rvec(std::initializer_list<long> v) {
  RationalVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (long x : v) out(i++) = x;
  return out;
}

RationalVector random_lambda(std::mt19937_64& rng, int n) {
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_rational(rng, 7);
  if (is_zero_matrix(v)) v(0) = 1;
  return v;
}

// Independent oracle for the degree-two Orlik-Solomon ideal: span of the
// boundaries of dependent triples (all triples inside a flat) and of parallel
// pairs.
RationalMatrix os_ideal_degree2(const Lattice2& lat) {
  const int n = lat.n;
  std::vector<RationalVector> gens;
  const Index cols = Index(n) * (n - 1) / 2;
  for (const auto& x : lat.flats)
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b)
        for (std::size_t c = b + 1; c < x.size(); ++c) {
          RationalVector g = RationalVector::Zero(cols);
          g(pair_position(n, x[b], x[c])) += 1;
          g(pair_position(n, x[a], x[c])) -= 1;
          g(pair_position(n, x[a], x[b])) += 1;
          gens.push_back(g);
        }
  for (const auto& x : lat.parallel)
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b) {
        RationalVector g = RationalVector::Zero(cols);
        g(pair_position(n, x[a], x[b])) = 1;
        gens.push_back(g);
      }
  return hstack(gens, cols);
}

}  // namespace

TEST_CASE("exterior basis") {
  const ExteriorBasis e(5, 3);
  CHECK(e.size() == 10);
  CHECK(e[0] == VertexSet{0, 1, 2});
  CHECK(e[9] == VertexSet{2, 3, 4});
  const ExteriorBasis p(6, 2);
  for (Index i = 0; i < p.size(); ++i) CHECK(pair_position(6, p[i][0], p[i][1]) == i);
  CHECK(ExteriorBasis(3, 0).size() == 1);
  CHECK(ExteriorBasis(2, 3).size() == 0);
}

TEST_CASE("nbc_basis examples") {
  const auto generic3 = make_lattice(3, {});
  const auto g = nbc_basis(generic3);
  CHECK(g.pairs.size() == 3);
  CHECK(g.projection == RationalMatrix::Identity(3, 3));

  const auto pencil = make_lattice(3, {{0, 1, 2}});
  const auto p = nbc_basis(pencil);
  CHECK(p.pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  REQUIRE(p.broken.size() == 1);
  // p(e_2 ^ e_3) = a_1 ^ a_3 - a_1 ^ a_2
  CHECK(p.projection(0, 2) == -1);
  CHECK(p.projection(1, 2) == 1);

  // braid(4): count pairs with no smaller index completing a triple flat.
  const auto b4 = one({"braid", 0, 4}).lattice;
  int count = 0;
  for (int j = 0; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k) {
      bool broken = false;
      for (int i = 0; i < j; ++i)
        for (const auto& x : b4.flats)
          if (std::set<int>(x.begin(), x.end()) == std::set<int>{i, j, k}) broken = true;
      count += !broken;
    }
  CHECK(count == 11);
  CHECK(nbc_basis(b4).pairs.size() == 11);
}

TEST_CASE("projection kills exactly the Orlik-Solomon ideal") {
  for (const auto& lat : fixture_lattices()) {
    const auto nbc = nbc_basis(lat);
    const RationalMatrix ideal = os_ideal_degree2(lat);
    const Index pairs = Index(lat.n) * (lat.n - 1) / 2;
    CHECK(rank(nbc.projection) == static_cast<Index>(nbc.pairs.size()));
    CHECK(static_cast<Index>(nbc.pairs.size()) == pairs - rank(ideal));
    CHECK(is_zero_matrix(RationalMatrix(nbc.projection * ideal)));
    CHECK(static_cast<long>(nbc.pairs.size()) == b2(lat));
  }
}

TEST_CASE("phi_one examples and rank = b2") {
  const auto pencil = make_lattice(3, {{0, 1, 2}});
  RationalMatrix want(2, 3);
  want << -1, 0, 1, 0, -1, -1;
  CHECK(phi_one(pencil) == want);
  RationalMatrix two(1, 1);
  two << -1;
  CHECK(phi_one(make_lattice(2, {})) == two);
  for (const auto& lat : fixture_lattices()) {
    const auto phi = phi_one(lat);
    CHECK(phi.rows() == b2(lat));
    CHECK(rank(phi) == b2(lat));
  }
}

TEST_CASE("delta3 examples") {
  CHECK(is_zero_matrix(delta3(4, RationalVector(RationalVector::Zero(4)))));
  RationalMatrix want(1, 3);
  want << 3, -2, 1;  // (lambda_3, -lambda_2, lambda_1) on e12, e13, e23
  CHECK(delta3(3, rvec({1, 2, 3})) == want);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    RationalVector l(4);
    for (int i = 0; i < 4; ++i) l(i) = random_nonzero_rational(rng);
    CHECK(rank(delta3(4, l)) == 3);
  }
}

TEST_CASE("resolution_d: d1 column, chain complex, generic ranks") {
  const RationalVector t = rvec({2, 3, 5});
  const RationalMatrix d1 = resolution_d_at(1, 3, t);
  CHECK(d1 == rvec({1, 2, 4}));
  CHECK(rank(resolution_d_at(2, 3, rvec({2, 1, 1}))) == 2);
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 6; ++n) {
    RationalVector tt(n), lam(n);
    for (int i = 0; i < n; ++i) {
      tt(i) = random_nonzero_rational(rng) + 3;
      lam(i) = random_rational(rng);
    }
    for (int k = 2; k <= n; ++k) {
      CHECK(is_zero_matrix(RationalMatrix(resolution_d_at(k, n, tt) * resolution_d_at(k - 1, n, tt))));
      CHECK(is_zero_matrix(RationalMatrix(delta_k(k, n, lam) * delta_k(k - 1, n, lam))));
    }
    if (n >= 3) {
      CHECK(delta3(n, lam) == omega_wedge2(lam));
      CHECK(is_zero_matrix(RationalMatrix(delta3(n, lam) * delta2(n, lam))));
    }
  }
}

TEST_CASE("resonance on the deconed diamond") {
  const auto lat = deconed_diamond();
  CHECK(resonance_rank(lat, RationalVector(RationalVector::Zero(6))) == b2(lat));
  std::mt19937_64 rng(3);
  CHECK(resonance_rank(lat, random_lambda(rng, 6)) == 15);
  for (const auto& x : lat.flats) {
    RationalVector l = RationalVector::Zero(6);
    l(x[0]) = 2;
    l(x[1]) = 5;
    l(x[2]) = -7;
    CHECK(resonance_rank(lat, l) <= 14);
    CHECK(in_resonance(lat, l, 1));
  }
}

TEST_CASE("braid(4) membership examples") {
  const auto lat = one({"braid", 0, 4}).lattice;
  const ResonanceTester<Rational> res(lat);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto l = random_lambda(rng, 6);
    CHECK_FALSE(res.in_resonance(l, 1));
    CHECK(res.h1_dim(l) == 0);
  }
  // Local component of the flat {H12, H13, H23}.
  const RationalVector local = rvec({2, 3, 0, -5, 0, 0});
  CHECK(res.in_resonance(local, 1));
  CHECK_FALSE(res.in_resonance(local, 2));
  CHECK(res.h1_dim(local) == 1);
  CHECK_THROWS_AS(res.h1_dim(RationalVector(RationalVector::Zero(6))), ValidationError);
  CHECK_THROWS_AS(res.in_resonance(RationalVector(RationalVector::Zero(6)), 1), ValidationError);
}

TEST_CASE("transpose identity, coherence and scale invariance on random points") {
  std::mt19937_64 rng(5);
  for (const auto& lat : fixture_lattices()) {
    const ResonanceTester<Rational> res(lat);
    CHECK(res.os_phi_transpose_check(RationalVector(RationalVector::Zero(lat.n))));
    for (int trial = 0; trial < 20; ++trial) {
      RationalVector l = random_lambda(rng, lat.n);
      // Half the samples sit on a local component so both verdicts occur.
      if (trial % 2 && !lat.flats.empty()) {
        const auto& x = lat.flats[static_cast<std::size_t>(trial) % lat.flats.size()];
        l.setZero();
        Rational sum = 0;
        for (std::size_t a = 1; a < x.size(); ++a) {
          l(x[a]) = random_nonzero_rational(rng);
          sum += l(x[a]);
        }
        l(x[0]) = -sum;
        if (is_zero_matrix(l)) l(x[0]) = 1, l(x[1]) = -1;
      }
      CHECK(res.os_phi_transpose_check(l));
      const Index h1 = res.h1_dim(l);
      for (int k = 1; k <= 3; ++k) {
        CHECK(res.in_resonance(l, k) == (h1 >= k));
        CHECK(res.in_resonance(RationalVector(l * Rational(-3, 2)), k) == res.in_resonance(l, k));
      }
    }
  }
}

TEST_CASE("cyclotomic lambda on monomial(3,3)") {
  const auto lat = one({"monomial", 3, 3}).lattice;
  const ResonanceTester<ExactScalar> res(lat);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    ExactVector l(lat.n);
    for (int i = 0; i < lat.n; ++i) l(i) = charvar::testing::random_cyclotomic(rng, 3, 3);
    if (is_zero_matrix(l)) l(0) = ExactScalar(1);
    CHECK(res.os_phi_transpose_check(l));
    CHECK(res.in_resonance(l, 1) == (res.h1_dim(l) >= 1));
  }
}

TEST_CASE("nontrivial Alexander invariant") {
  CHECK(has_nontrivial_alexander_invariant(one({"braid", 0, 4}).lattice));
  CHECK_FALSE(has_nontrivial_alexander_invariant(one({"generic", 0, 0, 5}).lattice));
}
