#include <doctest.h>

#include "charvar/alexander.hpp"
#include "charvar/components.hpp"
#include "charvar/errors.hpp"
#include "charvar/io.hpp"
#include "charvar/osres.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace charvar;
using charvar::testing::random_nonzero_rational;

namespace {

FreeWord word(std::vector<int> letters) { return FreeWord(letters); }
FreeWord g(int i) { return FreeWord::generator(i); }

BraidWord braid(std::initializer_list<BraidFactor> f) { return BraidWord{f}; }

BraidWord random_pure_word(std::mt19937_64& rng, int n, int max_len) {
  BraidWord b;
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int s = 0; s < len; ++s) {
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng), j = i;
    while (j == i) j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    b.factors.push_back(BraidFactor::A(std::min(i, j), std::max(i, j), rng() % 2 ? 1 : -1));
  }
  return b;
}

BraidWord random_half_twist_word(std::mt19937_64& rng, int n, int max_len) {
  BraidWord b;
  const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  for (int s = 0; s < len; ++s)
    b.factors.push_back(BraidFactor::sigma(std::uniform_int_distribution<int>(0, n - 2)(rng), rng() % 2 ? 1 : -1));
  return b;
}

std::vector<ExactScalar> random_point(std::mt19937_64& rng, int n) {
  std::vector<ExactScalar> t;
  for (int i = 0; i < n; ++i) t.push_back(ExactScalar(random_nonzero_rational(rng, 7)));
  return t;
}

ExactVector as_vector(const std::vector<ExactScalar>& t) {
  ExactVector v(static_cast<Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) v(static_cast<Index>(i)) = t[i];
  return v;
}

LaurentPoly var(int n, int i) { return LaurentPoly::variable(n, i); }
LaurentPoly mono(std::vector<int> e) { return LaurentPoly::monomial(e); }

// Rows of `diff` lie in the row space of d_3 at t.
bool in_image_of_d3(const LaurentMatrix& diff, const std::vector<ExactScalar>& t) {
  const int n = static_cast<int>(t.size());
  const ExactMatrix d3 = resolution_d_at<ExactScalar>(3, n, as_vector(t));
  return rank(d3) == rank(vstack(d3, laurent_eval(diff, t)));
}

std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Fox Jacobian of the relators alpha_k(g_i) g_i^-1, i in X_k', evaluated
// letter by letter; an independent route to the Alexander matrix.
ExactMatrix relator_jacobian(const MonodromyInput& m, const std::vector<ExactScalar>& strand_t) {
  const int n = m.n;
  std::vector<std::vector<ExactScalar>> rows;
  for (const auto& gen : m.generators) {
    const auto img = artin_images(monodromy_braid(gen, n), n);
    VertexSet x = gen.x;
    std::sort(x.begin(), x.end());
    for (std::size_t a = 1; a < x.size(); ++a) {
      const FreeWord r = img[static_cast<std::size_t>(x[a])] * g(x[a]).inverse();
      std::vector<ExactScalar> row(static_cast<std::size_t>(n), ExactScalar(0));
      ExactScalar prefix(1);
      for (int l : r.letters()) {
        const std::size_t j = static_cast<std::size_t>(std::abs(l) - 1);
        if (l > 0) {
          row[j] += prefix;
          prefix *= strand_t[j];
        } else {
          prefix /= strand_t[j];
          row[j] -= prefix;
        }
      }
      rows.push_back(row);
    }
  }
  ExactMatrix out(static_cast<Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) out(static_cast<Index>(r), j) = rows[r][static_cast<std::size_t>(j)];
  return out;
}

MonodromyInput diamond_monodromy() {
  return monodromy_from_json(read_json_file(CHARVAR_FIXTURE_DIR "/diamond_deconed_monodromy.json"));
}

// Random point on a torus given by saturated equations, through an integer
// basis of the character-lattice annihilator.
std::vector<ExactScalar> torus_point(std::mt19937_64& rng, const TorusComponent& tor) {
  const IntegerMatrix ker = integer_kernel(tor.equations);
  std::vector<ExactScalar> t(static_cast<std::size_t>(tor.n), ExactScalar(1));
  for (Index r = 0; r < ker.rows(); ++r) {
    const ExactScalar base(random_nonzero_rational(rng, 5));
    for (int i = 0; i < tor.n; ++i) t[static_cast<std::size_t>(i)] *= base.pow(static_cast<long>(ker(r, i)));
  }
  return t;
}

int max_k(const AlexanderPresentation& ap, const std::vector<ExactScalar>& t) {
  int k = 0;
  while (ap.membership(t, k + 1).in_vk) ++k;
  return k;
}

}  // namespace

TEST_CASE("free words reduce") {
  CHECK(word({1, 2, -2, -1}).empty());
  CHECK(word({1, 2, -2, 3}).letters() == std::vector<int>{1, 3});
  CHECK((g(0) * g(1)).inverse() == word({-2, -1}));
  CHECK(word({1, 1, -3}).abelianization(3) == Exponent{2, 0, -1});
  CHECK(word({1, -2}).to_string() == "g1 g2^-1");
  CHECK(FreeWord().to_string() == "1");
  CHECK_THROWS_AS(word({0}), ValidationError);
}

TEST_CASE("artin action of the generators") {
  const int n = 4;
  CHECK(artin_apply(BraidWord{}, word({1, -3, 2}), n) == word({1, -3, 2}));
  // A_12(g1) = (g1 g2) g1 (g1 g2)^-1, A_12(g2) = (g1 g2) g2 (g1 g2)^-1.
  CHECK(artin_apply(braid({BraidFactor::A(0, 1)}), g(0), n) == word({1, 2, 1, -2, -1}));
  CHECK(artin_apply(braid({BraidFactor::A(0, 1)}), g(1), n) == word({1, 2, -1}));
  // Interior strand: conjugation by [g1, g3].
  CHECK(artin_apply(braid({BraidFactor::A(0, 2)}), g(1), n) == word({1, 3, -1, -3, 2, 3, 1, -3, -1}));
  CHECK(artin_apply(braid({BraidFactor::A(0, 2)}), g(3), n) == g(3));
  CHECK(artin_apply(braid({BraidFactor::sigma(1)}), g(1), n) == word({2, 3, -2}));
  CHECK(artin_apply(braid({BraidFactor::sigma(1)}), g(2), n) == g(1));
  CHECK(braid_permutation(braid({BraidFactor::sigma(1)}), n) == std::vector<int>{0, 2, 1, 3});
  CHECK_THROWS_AS(artin_apply(braid({BraidFactor::A(2, 4)}), g(0), n), ValidationError);
  CHECK_THROWS_AS(artin_apply(braid({BraidFactor::A(1, 1)}), g(0), n), ValidationError);
}

TEST_CASE("artin action: group law, inverses, product, IA property") {
  std::mt19937_64 rng(11);
  const int n = 5;
  FreeWord prod;
  for (int i = 0; i < n; ++i) prod *= g(i);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord b1 = trial % 2 ? random_pure_word(rng, n, 3) : random_half_twist_word(rng, n, 3);
    const BraidWord b2 = random_pure_word(rng, n, 3);
    const FreeWord w = word({1 + static_cast<int>(rng() % n), -(1 + static_cast<int>(rng() % n)), 1 + static_cast<int>(rng() % n)});
    CHECK(artin_apply(b1 * b2, w, n) == artin_apply(b2, artin_apply(b1, w, n), n));
    CHECK(artin_apply(b1 * b1.inverse(), w, n) == w);
    CHECK(artin_apply(b1, prod, n) == prod);
    const auto img = artin_images(b2, n);
    for (int i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[static_cast<std::size_t>(i)] = 1;
      CHECK(img[static_cast<std::size_t>(i)].abelianization(n) == e);
    }
    CHECK(is_pure(b2, n));
  }
}

TEST_CASE("A_ij agrees with its half-twist expansion") {
  const int n = 5;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int e : {1, -1}) {
        BraidWord s;
        for (const auto& [k, x] : pure_generator_in_half_twists(i, j, e)) s.factors.push_back(BraidFactor::sigma(k, x));
        CHECK(artin_images(braid({BraidFactor::A(i, j, e)}), n) == artin_images(s, n));
      }
}

TEST_CASE("full twist") {
  CHECK(full_twist({0, 1}) == braid({BraidFactor::A(0, 1)}));
  CHECK(full_twist({0, 1, 2}) == braid({BraidFactor::A(0, 1), BraidFactor::A(0, 2), BraidFactor::A(1, 2)}));
  CHECK(full_twist({0, 2, 3}) == braid({BraidFactor::A(0, 2), BraidFactor::A(0, 3), BraidFactor::A(2, 3)}));
  CHECK(full_twist({0, 1, 2, 3, 4}).size() == 10);
  CHECK_THROWS_AS(full_twist({2}), ValidationError);
  for (int n = 2; n <= 6; ++n) {
    VertexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    FreeWord prod;
    for (int i = 0; i < n; ++i) prod *= g(i);
    const auto img = artin_images(full_twist(all), n);
    for (int i = 0; i < n; ++i) CHECK(img[static_cast<std::size_t>(i)] == prod * g(i) * prod.inverse());
  }
  // A_X on a consecutive block is conjugation by the block product there.
  const auto img = artin_images(full_twist({1, 2, 3}), 5);
  const FreeWord block = g(1) * g(2) * g(3);
  CHECK(img[0] == g(0));
  CHECK(img[2] == block * g(2) * block.inverse());
  CHECK(img[4] == g(4));
}

TEST_CASE("fox derivatives") {
  const int n = 3;
  // d(g1 g2 g1^-1)/dg1 = 1 - t1 t2 t1^-1 = 1 - t2, d/dg2 = t1.
  const auto terms = fox_terms(word({1, 2, -1}), n);
  CHECK(terms[0] == std::map<Exponent, long>{{{0, 0, 0}, 1}, {{0, 1, 0}, -1}});
  CHECK(terms[1] == std::map<Exponent, long>{{{1, 0, 0}, 1}});
  CHECK(terms[2].empty());
  // Fundamental formula: sum_j (dw/dg_j)(t_j - 1) = t^w - 1.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FreeWord w = artin_apply(random_pure_word(rng, n, 3), word({1, -3, 2, 2}), n);
    const auto ft = fox_terms(w, n);
    LaurentPoly s(n, Rational(0));
    for (int j = 0; j < n; ++j) {
      LaurentPoly d(n, Rational(0));
      for (const auto& [e, c] : ft[static_cast<std::size_t>(j)]) d += LaurentPoly::monomial(e, Rational(c));
      s += d * (var(n, j) - LaurentPoly(n, Rational(1)));
    }
    CHECK(s == LaurentPoly::monomial_minus_one(w.abelianization(n)));
  }
}

TEST_CASE("gassner: identity, IA at 1, multiplicativity") {
  const int n = 4;
  CHECK(gassner(BraidWord{}, n) == laurent_identity(n));
  std::mt19937_64 rng(8);
  const std::vector<ExactScalar> one(n, ExactScalar(1));
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord b1 = random_pure_word(rng, n, 3), b2 = random_pure_word(rng, n, 3);
    CHECK(laurent_eval(gassner(b1, n), one) == ExactMatrix::Identity(n, n));
    CHECK(gassner(b1 * b2, n) == laurent_product(gassner(b1, n), gassner(b2, n)));
    const auto t = random_point(rng, n);
    CHECK(gassner_at(b1, n, t) == laurent_eval(gassner(b1, n), t));
  }
  // Non-pure: permutation matrix at t = 1.
  const ExactMatrix s = laurent_eval(gassner(braid({BraidFactor::sigma(0)}), n), one);
  CHECK(s(0, 1) == ExactScalar(1));
  CHECK(s(1, 0) == ExactScalar(1));
}

TEST_CASE("phi_AX examples") {
  const int n = 3;
  const LaurentMatrix phi = phi_AX({0, 1, 2}, n);
  // Row 2: e2 ^ (e1 + t1 e2 + t1 t2 e3) = -e12 + t1 t2 e23.
  CHECK(phi(1, pair_position(n, 0, 1)) == LaurentPoly(n, Rational(-1)));
  CHECK(phi(1, pair_position(n, 0, 2)).is_zero());
  CHECK(phi(1, pair_position(n, 1, 2)) == mono({1, 1, 0}));
  // Interior non-member: (t2 - 1) nabla_{13} ^ nabla_{3} = (t2 - 1) e13.
  const LaurentMatrix phi13 = phi_AX({0, 2}, n);
  CHECK(phi13(1, pair_position(n, 0, 2)) == var(n, 1) - LaurentPoly(n, Rational(1)));
  CHECK(phi13(1, pair_position(n, 0, 1)).is_zero());
  // Rows outside [min X, max X] vanish.
  const LaurentMatrix phi5 = phi_AX({1, 3}, 5);
  for (Index c = 0; c < phi5.cols(); ++c) {
    CHECK(phi5(0, c).is_zero());
    CHECK(phi5(4, c).is_zero());
  }
  // At 1 the X-rows are e_i ^ sum_{j in X} e_j.
  const ExactMatrix at1 = laurent_eval(phi_AX({0, 2, 3}, 5), std::vector<ExactScalar>(5, ExactScalar(1)));
  for (int i : {0, 2, 3})
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        int want = 0;
        if (a == i && (b == 2 || b == 3 || b == 0)) want = 1;
        if (b == i && (a == 0 || a == 2 || a == 3)) want = -1;
        CHECK(at1(i, pair_position(5, a, b)) == ExactScalar(want));
      }
}

TEST_CASE("convention anchor: d2 Phi = Theta - id") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    const LaurentMatrix d2 = resolution_d(2, n);
    for (int size = 2; size <= std::min(n, 4); ++size)
      for (const auto& x : subsets_of_size(n, size)) {
        const BraidWord delta = rng() % 3 == 0 ? random_half_twist_word(rng, n, 4) : random_pure_word(rng, n, 4);
        const BraidWord alpha = monodromy_braid({x, delta}, n);
        const LaurentMatrix theta_minus_id = gassner(alpha, n) - laurent_identity(n);
        CHECK(laurent_product(phi_gen({x, delta}, n), d2) == theta_minus_id);
        CHECK(laurent_product(phi_AX(x, n), d2) == gassner(full_twist(x), n) - laurent_identity(n));
      }
  }
}

TEST_CASE("phi_AX against the generic route") {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 6; ++n)
    for (int size = 2; size <= std::min(n, 4); ++size)
      for (const auto& x : subsets_of_size(n, size)) {
        const LaurentMatrix f = phi_AX(x, n), gen = phi_gen({x, {}}, n);
        for (int i : x) CHECK(f.row(i) == gen.row(i));
        const LaurentMatrix diff = f - gen;
        CHECK(in_image_of_d3(diff, random_point(rng, n)));
      }
}

TEST_CASE("conjugation formula for pure conjugators") {
  std::mt19937_64 rng(23);
  const int n = 5;
  const LaurentMatrix d2 = resolution_d(2, n);
  for (int trial = 0; trial < 12; ++trial) {
    const auto xs = subsets_of_size(n, 2 + trial % 3);
    const VertexSet x = xs[rng() % xs.size()];
    const BraidWord delta = random_pure_word(rng, n, 3);
    const LaurentMatrix conj = phi_conjugated(x, delta, n);
    const LaurentMatrix gen = phi_gen({x, delta}, n);
    CHECK(laurent_product(conj, d2) == gassner(monodromy_braid({x, delta}, n), n) - laurent_identity(n));
    CHECK(in_image_of_d3(LaurentMatrix(conj - gen), random_point(rng, n)));
  }
  CHECK_THROWS_AS(phi_conjugated({0, 1}, braid({BraidFactor::sigma(0)}), 3), ValidationError);
}

TEST_CASE("monodromy generators") {
  const int n = 4;
  // Pure delta: alpha = delta^-1 A_X delta twists X.
  const BraidWord d = braid({BraidFactor::A(0, 3)});
  CHECK(monodromy_braid({{1, 2}, d}, n) == d.inverse() * full_twist({1, 2}) * d);
  // Half twist delta = sigma_2: Y is the image of X under sigma_2^-1.
  const BraidWord alpha = monodromy_braid({{0, 1}, braid({BraidFactor::sigma(1)})}, n);
  CHECK(is_pure(alpha, n));
  const auto img = artin_images(alpha, n);
  CHECK(img[0] != g(0));
  CHECK(img[1] != g(1));
  CHECK(img[3] == g(3));
  // Double point at 1 is the phi_one row -e_jk.
  const ExactMatrix at1 = laurent_eval(phi_gen({{1, 3}, braid({BraidFactor::A(0, 2)})}, n), std::vector<ExactScalar>(n, 1));
  CHECK(at1(3, pair_position(n, 1, 3)) == ExactScalar(-1));
  CHECK(is_zero_matrix(at1.row(0)));
  CHECK(is_zero_matrix(at1.row(2)));
}

TEST_CASE("monodromy lattice and validation") {
  CHECK(monodromy_lattice(pencil_monodromy(4)) == make_lattice(4, {{0, 1, 2, 3}}));
  CHECK(monodromy_lattice(generic_monodromy(4)) == make_lattice(4, {}));
  MonodromyInput bad = generic_monodromy(3);
  bad.generators.push_back({{0, 1, 2}, {}});
  CHECK_THROWS_AS(monodromy_lattice(bad), ValidationError);
  MonodromyInput chain;
  chain.n = 3;
  chain.generators = {{{0, 1}, {}}};  // {0,2} and {1,2} unmet but {0,1} met
  CHECK_THROWS_AS(monodromy_lattice(chain), ValidationError);
  MonodromyInput lab = pencil_monodromy(3);
  lab.labels = {0, 0, 1};
  CHECK_THROWS_AS(monodromy_lattice(lab), ValidationError);
  CHECK_THROWS_AS(check_monodromy(pencil_monodromy(4), make_lattice(4, {})), ValidationError);
}

TEST_CASE("resolution d") {
  const LaurentMatrix d1 = resolution_d(1, 3);
  for (int i = 0; i < 3; ++i) CHECK(d1(i, 0) == var(3, i) - LaurentPoly(3, Rational(1)));
  CHECK(is_zero_matrix(laurent_eval(laurent_product(resolution_d(3, 4), resolution_d(2, 4)), std::vector<ExactScalar>(4, 2))));
  const LaurentMatrix prod = laurent_product(resolution_d(3, 4), resolution_d(2, 4));
  for (Index i = 0; i < prod.rows(); ++i)
    for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
  const LaurentMatrix prod21 = laurent_product(resolution_d(2, 4), resolution_d(1, 4));
  for (Index i = 0; i < prod21.rows(); ++i) CHECK(prod21(i, 0).is_zero());
  CHECK(rank(laurent_eval(resolution_d(2, 3), std::vector<ExactScalar>{2, 1, 1})) == 2);
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto t = random_point(rng, n);
      long c = 1;
      for (int i = 0; i < k - 1; ++i) c = c * (n - 1 - i) / (i + 1);
      CHECK(rank(laurent_eval(resolution_d(k, n), t)) == c);
    }
  CHECK_THROWS_AS(resolution_d(0, 3), ValidationError);
  CHECK_THROWS_AS(resolution_d(4, 3), ValidationError);
}

TEST_CASE("delta presentation: shape, symbolic vs evaluated, rank at 1") {
  std::mt19937_64 rng(31);
  const MonodromyInput dia = diamond_monodromy();
  for (const MonodromyInput& m : {pencil_monodromy(4), pencil_monodromy(5), generic_monodromy(3), generic_monodromy(4), dia}) {
    const AlexanderPresentation ap(m);
    const int n = m.n;
    const LaurentMatrix d = delta_presentation(m);
    CHECK(d.rows() == ap.b() + Index(n) * (n - 1) * (n - 2) / 6);
    CHECK(d.cols() == Index(n) * (n - 1) / 2);
    CHECK(ap.b() == b2(monodromy_lattice(m)));
    const std::vector<ExactScalar> one(static_cast<std::size_t>(n), ExactScalar(1));
    CHECK(rank(ap.delta_at(one)) == ap.b());
    const auto t = random_point(rng, n);
    CHECK(ap.delta_at(t) == laurent_eval(d, m.to_strands(t)));
    CHECK(ap.partial2_at(t) == laurent_eval(partial2(m), m.to_strands(t)));
  }
  // Phi(1) blocks reproduce phi_one of the lattice (row sets).
  for (const MonodromyInput& m : {pencil_monodromy(5), generic_monodromy(4)}) {
    const ExactMatrix a = AlexanderPresentation(m).phi_rows_at(std::vector<ExactScalar>(static_cast<std::size_t>(m.n), 1));
    const RationalMatrix b = phi_one<Rational>(monodromy_lattice(m));
    REQUIRE(a.rows() == b.rows());
    std::multiset<std::vector<std::string>> ra, rb;
    for (Index i = 0; i < a.rows(); ++i) {
      std::vector<std::string> x, y;
      for (Index j = 0; j < a.cols(); ++j) {
        x.push_back(a(i, j).to_string());
        y.push_back(ExactScalar(b(i, j)).to_string());
      }
      ra.insert(x);
      rb.insert(y);
    }
    CHECK(ra == rb);
  }
  MonodromyInput big = generic_monodromy(9);
  CHECK_THROWS_AS(delta_presentation(big), CapExceeded);
}

TEST_CASE("partial2 = d2 Phi equals the relator Fox jacobian") {
  std::mt19937_64 rng(37);
  const MonodromyInput dia = diamond_monodromy();
  for (const MonodromyInput& m : {pencil_monodromy(4), generic_monodromy(4), dia}) {
    const AlexanderPresentation ap(m);
    for (int s = 0; s < 4; ++s) {
      const auto t = random_point(rng, m.n);
      CHECK(ap.partial2_at(t) == relator_jacobian(m, m.to_strands(t)));
    }
  }
}

TEST_CASE("membership: pencils") {
  std::mt19937_64 rng(41);
  for (int n : {3, 4, 5}) {
    const AlexanderPresentation ap(pencil_monodromy(n));
    for (int s = 0; s < 6; ++s) {
      auto t = random_point(rng, n - 1);
      ExactScalar prod(1);
      for (const auto& x : t) prod *= x;
      t.push_back(prod.inverse());
      CHECK(ap.membership(t, n - 2).in_vk);
      CHECK_FALSE(ap.membership(t, n - 1).in_vk);
      const auto off = random_point(rng, n);
      ExactScalar p2(1);
      for (const auto& x : off) p2 *= x;
      if (p2.is_one()) continue;
      const Membership m1 = ap.membership(off, 1);
      CHECK_FALSE(m1.in_vk);
      CHECK(m1.agree);
    }
  }
}

TEST_CASE("membership: generic arrangements and the trivial character") {
  std::mt19937_64 rng(43);
  const AlexanderPresentation ap3(generic_monodromy(3));
  for (int s = 0; s < 10; ++s) {
    const auto t = random_point(rng, 3);
    CHECK(rank(ap3.delta_at(t)) == 3);
    CHECK_FALSE(ap3.membership(t, 1).in_vk);
  }
  for (const MonodromyInput& m : {pencil_monodromy(4), generic_monodromy(4), diamond_monodromy()}) {
    const AlexanderPresentation ap(m);
    const std::vector<ExactScalar> one(static_cast<std::size_t>(m.n), 1);
    const long bound = static_cast<long>(m.n) * (m.n - 1) / 2 - ap.b();
    for (int k = 0; k <= bound; ++k) CHECK(ap.membership(one, k).in_vk);
    CHECK_FALSE(ap.membership(one, static_cast<int>(bound) + 1).in_vk);
    CHECK_FALSE(ap.membership(one, 1).comparable);
  }
  std::vector<ExactScalar> zero{1, 0, 1};
  CHECK_THROWS_AS(in_charvar(generic_monodromy(3), zero, 1), ValidationError);
  CHECK_THROWS_AS(in_charvar(generic_monodromy(3), std::vector<ExactScalar>{1, 2}, 1), ValidationError);
}

TEST_CASE("deconed diamond monodromy fixture") {
  const MonodromyInput m = diamond_monodromy();
  const Fixture dia = gen_family({"diamond"}).front();
  const Deconed dec = decone(*dia.arrangement);
  CHECK(dec.at_infinity == 6);
  check_monodromy(m, lattice_of(dec.affine));
  const AlexanderPresentation ap(m);
  CHECK(ap.b() == 9);
  CHECK(rank(ap.delta_at(std::vector<ExactScalar>(6, 1))) == 9);

  std::mt19937_64 rng(47);
  const EnumerationResult res = enumerate_first_resonance(dia.lattice);
  REQUIRE(res.components.size() == 9);
  for (const auto& c : res.components) {
    const TorusComponent tor = exponentiate(c);
    for (int s = 0; s < 4; ++s) {
      const auto t = torus_point(rng, tor);
      const std::vector<ExactScalar> deconed(t.begin(), t.end() - 1);
      const Membership m1 = ap.membership(deconed, 1);
      CHECK(m1.in_vk);
      CHECK(m1.agree);
      CHECK_FALSE(ap.membership(deconed, 2).in_vk);
    }
  }
  const std::vector<ExactScalar> torsion{1, -1, -1, 1, -1, -1};
  CHECK(ap.membership(torsion, 2).in_vk);
  CHECK_FALSE(ap.membership(torsion, 3).in_vk);
  CHECK(ap.membership(torsion, 2).agree);
  for (int s = 0; s < 10; ++s) CHECK_FALSE(ap.membership(random_point(rng, 6), 1).in_vk);
}

TEST_CASE("tangent cone consistency on pencils") {
  std::mt19937_64 rng(53);
  for (int n : {3, 4}) {
    const Lattice2 lat = monodromy_lattice(pencil_monodromy(n));
    const AlexanderPresentation ap(pencil_monodromy(n));
    const EnumerationResult res = enumerate_first_resonance(lat);
    REQUIRE(res.components.size() == 1);
    for (int s = 0; s < 5; ++s) CHECK(ap.membership(torus_point(rng, exponentiate(res.components[0])), 1).in_vk);
  }
}

TEST_CASE("product rule on F_n1 x F_n2") {
  std::mt19937_64 rng(59);
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    MonodromyInput m;
    m.n = n1 + n2;
    for (int i = 0; i < n1; ++i)
      for (int j = n1; j < n1 + n2; ++j) m.generators.push_back({{i, j}, {}});
    CHECK(monodromy_lattice(m).parallel.size() == 2);
    const AlexanderPresentation ap(m);
    const auto tori = product_components(free_group_components(n1, 1), n1, free_group_components(n2, 1), n2);
    REQUIRE(tori.size() == 2);
    for (int s = 0; s < 4; ++s) {
      CHECK(max_k(ap, torus_point(rng, tori[0])) == n1 - 1);
      CHECK(max_k(ap, torus_point(rng, tori[1])) == n2 - 1);
      CHECK(max_k(ap, random_point(rng, m.n)) == 0);
    }
  }
}

TEST_CASE("fitting ideals") {
  const int n = 3;
  const LaurentMatrix d3 = resolution_d(3, n);
  const auto f3 = fitting_generators(d3, 3);
  REQUIRE(f3.size() == 3);
  for (int i = 0; i < n; ++i) {
    const LaurentPoly want = var(n, i) - LaurentPoly(n, Rational(1));
    CHECK(std::any_of(f3.begin(), f3.end(), [&](const LaurentPoly& p) { return p == want || p == -want; }));
  }
  for (int k = -1; k <= 2; ++k) CHECK(fitting_generators(d3, k).empty());
  CHECK(fitting_generators(d3, 4) == std::vector<LaurentPoly>{LaurentPoly(1)});
  const LaurentMatrix id = laurent_identity(2);
  const auto f1 = fitting_generators(id, 1);
  REQUIRE(f1.size() == 1);
  CHECK((f1[0] == LaurentPoly(1) || f1[0] == LaurentPoly(-1)));
  CHECK(fitting_generators(id, 2).size() == 1);  // entries 1 (zeros dropped)
  CHECK_THROWS_AS(fitting_generators(laurent_identity(6), 1), CapExceeded);
  CHECK(fitting_generators(laurent_identity(6), 1, 6).size() == 1);
}

TEST_CASE("monodromy JSON round trip") {
  const MonodromyInput m = diamond_monodromy();
  const MonodromyInput back = monodromy_from_json(monodromy_to_json(m));
  CHECK(back.n == m.n);
  CHECK(back.labels == m.labels);
  REQUIRE(back.generators.size() == m.generators.size());
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    CHECK(back.generators[i].x == m.generators[i].x);
    CHECK(back.generators[i].delta == m.generators[i].delta);
  }
  CHECK_THROWS_AS(monodromy_from_json(Json::parse(R"({"n": 3, "generators": [{"X": [1, 4]}]})")), ValidationError);
  CHECK_THROWS_AS(monodromy_from_json(Json::parse(R"({"n": 3, "generators": [{"X": [1, 2], "delta": [["B", 1, 2, 1]]}]})")),
                  ValidationError);
  const MonodromyInput a = monodromy_from_json(Json::parse(R"({"n": 3, "generators": [{"X": [1, 2, 3], "delta": [["A", 1, 3, -1]]}]})"));
  CHECK(a.generators[0].delta == braid({BraidFactor::A(0, 2, -1)}));
}

TEST_CASE("V_k is the trivial character for n <= k <= C(n,2) - b2") {
  std::mt19937_64 rng(61);
  for (const MonodromyInput& m : {pencil_monodromy(4), generic_monodromy(4), generic_monodromy(5), diamond_monodromy()}) {
    const AlexanderPresentation ap(m);
    const long top = static_cast<long>(m.n) * (m.n - 1) / 2 - ap.b();
    CAPTURE(m.n);
    for (int k = m.n; k <= top; ++k) {
      CHECK(ap.membership(std::vector<ExactScalar>(static_cast<std::size_t>(m.n), 1), k).in_vk);
      for (int s = 0; s < 3; ++s) {
        const Membership mem = ap.membership(random_point(rng, m.n), k);
        CHECK_FALSE(mem.in_vk);
        CHECK(mem.range_n == std::min<long>(m.n, top));
        CHECK(mem.comparable == (k <= mem.range_n));
        CHECK(mem.agree);
      }
    }
  }
  // Empty range: a pencil of three lines has C(3,2) - b2 = 1 < 3.
  const AlexanderPresentation p(pencil_monodromy(3));
  const Membership mem = p.membership(std::vector<ExactScalar>{2, 3, 5}, 3);
  CHECK(mem.range_n == 1);
  CHECK_FALSE(mem.comparable);
}
