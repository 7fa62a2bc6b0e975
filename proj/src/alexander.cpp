#include "charvar/alexander.hpp"

#include "charvar/errors.hpp"
#include "charvar/osres.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace charvar {

namespace {

int gen_of(int letter) { return std::abs(letter) - 1; }

Index pairs_count(int n) { return Index(n) * (n - 1) / 2; }

// Substitutes images[g] (or its inverse) for every letter of w.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int l : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>(gen_of(l))];
    out *= l > 0 ? img : img.inverse();
  }
  return out;
}

std::vector<FreeWord> identity_images(int n) {
  std::vector<FreeWord> out;
  for (int i = 0; i < n; ++i) out.push_back(FreeWord::generator(i));
  return out;
}

FreeWord g(int i) { return FreeWord::generator(i); }

// Images of the generators under one factor with exponent +-1.
std::vector<FreeWord> sigma_images(int i, bool inverse, int n) {
  auto img = identity_images(n);
  if (!inverse) {
    img[i] = g(i) * g(i + 1) * g(i).inverse();
    img[i + 1] = g(i);
  } else {
    img[i] = g(i + 1);
    img[i + 1] = g(i + 1).inverse() * g(i) * g(i + 1);
  }
  return img;
}

std::vector<FreeWord> compose(const std::vector<FreeWord>& outer, const std::vector<FreeWord>& inner) {
  std::vector<FreeWord> out;
  for (const auto& w : inner) out.push_back(substitute(w, outer));
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> pure_generator_in_half_twists(int i, int j, int exp) {
  std::vector<std::pair<int, int>> w;
  for (int k = j - 1; k > i; --k) w.emplace_back(k, 1);
  w.emplace_back(i, exp);
  w.emplace_back(i, exp);
  for (int k = i + 1; k < j; ++k) w.emplace_back(k, -1);
  return w;
}

namespace {

std::vector<FreeWord> pure_images(int i, int j, bool inverse, int n) {
  if (!inverse) {
    auto img = identity_images(n);
    const FreeWord p = g(i) * g(j);
    img[i] = p * g(i) * p.inverse();
    img[j] = p * g(j) * p.inverse();
    const FreeWord c = g(i) * g(j) * g(i).inverse() * g(j).inverse();
    for (int k = i + 1; k < j; ++k) img[k] = c * g(k) * c.inverse();
    return img;
  }
  std::vector<FreeWord> img = identity_images(n);
  for (const auto& [k, e] : pure_generator_in_half_twists(i, j, -1)) img = compose(sigma_images(k, e < 0, n), img);
  return img;
}

std::vector<FreeWord> factor_images(const BraidFactor& f, int n) {
  const bool inverse = f.exp < 0;
  const auto unit = f.kind == BraidFactor::Kind::half ? sigma_images(f.i, inverse, n) : pure_images(f.i, f.j, inverse, n);
  auto img = identity_images(n);
  for (int e = 0; e < std::abs(f.exp); ++e) img = compose(img, unit);
  return img;
}

// Coefficient vector of u ^ v on the lexicographic basis of E^2.
template <typename Scalar, typename Row>
void wedge_into(const std::vector<Scalar>& u, const std::vector<Scalar>& v, Row row, int n) {
  for (int c = 0; c < n; ++c)
    for (int d = c + 1; d < n; ++d) {
      Scalar x = u[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(d)] -
                 u[static_cast<std::size_t>(d)] * v[static_cast<std::size_t>(c)];
      row(0, pair_position(n, c, d)) = std::move(x);
    }
}

LaurentPoly to_poly(const std::map<Exponent, long>& terms, int n) {
  LaurentPoly p(n, Rational(0));
  for (const auto& [e, c] : terms) p += LaurentPoly::monomial(e, Rational(c));
  return p;
}

class PointEvaluator {
 public:
  explicit PointEvaluator(std::span<const ExactScalar> t) : t_(t.begin(), t.end()) {
    for (const auto& x : t_) {
      if (x.is_zero()) throw ValidationError("point has a zero coordinate");
      inv_.push_back(x.inverse());
    }
  }

  ExactScalar operator()(const std::map<Exponent, long>& terms) {
    ExactScalar s(0);
    for (const auto& [e, c] : terms) s += monomial(e) * ExactScalar(c);
    return s;
  }

  const ExactScalar& monomial(const Exponent& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    ExactScalar v(1);
    for (std::size_t j = 0; j < e.size(); ++j) {
      const ExactScalar& base = e[j] > 0 ? t_[j] : inv_[j];
      for (int r = 0; r < std::abs(e[j]); ++r) v *= base;
    }
    return cache_.emplace(e, std::move(v)).first->second;
  }

 private:
  std::vector<ExactScalar> t_, inv_;
  std::map<Exponent, ExactScalar> cache_;
};

// nabla(z) for alpha(g_i) = z g_i z^-1.
std::vector<std::map<Exponent, long>> conjugator_nabla(const FreeWord& w, int i, int n) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0 || l[l.size() / 2] != i + 1) throw ValidationError("braid is not pure");
  const FreeWord z(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2)));
  if (!(z * g(i) * z.inverse() == w)) throw ValidationError("braid is not pure");
  return fox_terms(z, n);
}

void check_point(std::span<const ExactScalar> t, int n) {
  if (static_cast<int>(t.size()) != n) throw ValidationError("point has the wrong length");
  for (const auto& x : t)
    if (x.is_zero()) throw ValidationError("point has a zero coordinate");
}

VertexSet sorted_unique(VertexSet x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

}  // namespace

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int l : letters) {
    if (l == 0) throw ValidationError("free word: letter 0");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int i) {
  FreeWord w;
  w.letters_.push_back(i + 1);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& b) {
  for (int l : b.letters_) {
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  return *this;
}

Exponent FreeWord::abelianization(int n) const {
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int l : letters_) e[static_cast<std::size_t>(gen_of(l))] += l > 0 ? 1 : -1;
  return e;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

BraidWord BraidWord::inverse() const {
  BraidWord b;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    BraidFactor f = *it;
    f.exp = -f.exp;
    b.factors.push_back(f);
  }
  return b;
}

BraidWord& BraidWord::operator*=(const BraidWord& b) {
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  return *this;
}

void BraidWord::validate(int n) const {
  for (const auto& f : factors) {
    if (f.exp == 0) throw ValidationError("braid factor with exponent 0");
    if (f.kind == BraidFactor::Kind::half) {
      if (f.i < 0 || f.i + 1 >= n) throw ValidationError("half twist index out of range");
    } else if (f.i < 0 || f.j >= n || f.i >= f.j) {
      throw ValidationError("pure braid generator needs 1 <= i < j <= n");
    }
  }
}

std::vector<FreeWord> artin_images(const BraidWord& beta, int n) {
  beta.validate(n);
  auto img = identity_images(n);
  for (const auto& f : beta.factors) img = compose(factor_images(f, n), img);
  return img;
}

FreeWord artin_apply(const BraidWord& beta, const FreeWord& w, int n) {
  for (int l : w.letters())
    if (gen_of(l) >= n) throw ValidationError("free word uses a generator outside [n]");
  return substitute(w, artin_images(beta, n));
}

std::vector<int> braid_permutation(const BraidWord& beta, int n) {
  std::vector<int> perm;
  for (const auto& w : artin_images(beta, n)) {
    const Exponent e = w.abelianization(n);
    const auto it = std::find(e.begin(), e.end(), 1);
    perm.push_back(static_cast<int>(it - e.begin()));
  }
  return perm;
}

bool is_pure(const BraidWord& beta, int n) {
  const auto perm = braid_permutation(beta, n);
  for (int i = 0; i < n; ++i)
    if (perm[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::vector<std::map<Exponent, long>> fox_terms(const FreeWord& w, int n) {
  std::vector<std::map<Exponent, long>> out(static_cast<std::size_t>(n));
  Exponent prefix(static_cast<std::size_t>(n), 0);
  auto add = [&](int j, long c) {
    auto& m = out[static_cast<std::size_t>(j)];
    if ((m[prefix] += c) == 0) m.erase(prefix);
  };
  for (int l : w.letters()) {
    const int j = gen_of(l);
    if (l > 0) {
      add(j, 1);
      ++prefix[static_cast<std::size_t>(j)];
    } else {
      --prefix[static_cast<std::size_t>(j)];
      add(j, -1);
    }
  }
  return out;
}

LaurentMatrix gassner(const BraidWord& beta, int n) {
  const auto img = artin_images(beta, n);
  LaurentMatrix m = laurent_zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto terms = fox_terms(img[static_cast<std::size_t>(i)], n);
    for (int j = 0; j < n; ++j) m(i, j) = to_poly(terms[static_cast<std::size_t>(j)], n);
  }
  return m;
}

ExactMatrix gassner_at(const BraidWord& beta, int n, std::span<const ExactScalar> t) {
  check_point(t, n);
  const auto img = artin_images(beta, n);
  PointEvaluator ev(t);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto terms = fox_terms(img[static_cast<std::size_t>(i)], n);
    for (int j = 0; j < n; ++j) m(i, j) = ev(terms[static_cast<std::size_t>(j)]);
  }
  return m;
}

BraidWord full_twist(const VertexSet& x) {
  const VertexSet s = sorted_unique(x);
  if (s.size() < 2) throw ValidationError("full twist needs |X| >= 2");
  BraidWord b;
  for (std::size_t c = 1; c < s.size(); ++c)
    for (std::size_t a = 0; a < c; ++a) b.factors.push_back(BraidFactor::A(s[a], s[c]));
  return b;
}

namespace {

// nabla_S = sum_{j in S} t_{S^j} e_j, S^j the members of S below j.
std::vector<LaurentPoly> nabla(const VertexSet& s, int n) {
  std::vector<LaurentPoly> v(static_cast<std::size_t>(n), LaurentPoly(n, Rational(0)));
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int j : s) {
    v[static_cast<std::size_t>(j)] = LaurentPoly::monomial(e);
    e[static_cast<std::size_t>(j)] = 1;
  }
  return v;
}

std::vector<LaurentPoly> basis_vector(int i, int n) {
  std::vector<LaurentPoly> v(static_cast<std::size_t>(n), LaurentPoly(n, Rational(0)));
  v[static_cast<std::size_t>(i)] = LaurentPoly(n, Rational(1));
  return v;
}

}  // namespace

LaurentMatrix phi_AX(const VertexSet& x, int n) {
  const VertexSet s = sorted_unique(x);
  if (s.empty() || s.front() < 0 || s.back() >= n) throw ValidationError("phi_AX: X outside [n]");
  LaurentMatrix m = laurent_zero(n, pairs_count(n));
  const auto nx = nabla(s, n);
  for (int i = s.front(); i <= s.back(); ++i) {
    if (std::binary_search(s.begin(), s.end(), i)) {
      wedge_into<LaurentPoly>(basis_vector(i, n), nx, m.row(i), n);
    } else {
      VertexSet above;
      for (int j : s)
        if (j > i) above.push_back(j);
      wedge_into<LaurentPoly>(nx, nabla(above, n), m.row(i), n);
      m.row(i) *= LaurentPoly::variable(n, i) - LaurentPoly(n, Rational(1));
    }
  }
  return m;
}

LaurentMatrix phi_pure(const BraidWord& alpha, int n) {
  const auto img = artin_images(alpha, n);
  LaurentMatrix m = laurent_zero(n, pairs_count(n));
  for (int i = 0; i < n; ++i) {
    const auto terms = conjugator_nabla(img[static_cast<std::size_t>(i)], i, n);
    std::vector<LaurentPoly> v;
    for (const auto& t : terms) v.push_back(to_poly(t, n));
    wedge_into<LaurentPoly>(basis_vector(i, n), v, m.row(i), n);
  }
  return m;
}

ExactMatrix phi_pure_at(const BraidWord& alpha, int n, std::span<const ExactScalar> t) {
  check_point(t, n);
  const auto img = artin_images(alpha, n);
  PointEvaluator ev(t);
  ExactMatrix m = ExactMatrix::Constant(n, pairs_count(n), ExactScalar(0));
  for (int i = 0; i < n; ++i) {
    const auto terms = conjugator_nabla(img[static_cast<std::size_t>(i)], i, n);
    std::vector<ExactScalar> v, e(static_cast<std::size_t>(n), ExactScalar(0));
    for (const auto& term : terms) v.push_back(ev(term));
    e[static_cast<std::size_t>(i)] = ExactScalar(1);
    wedge_into<ExactScalar>(e, v, m.row(i), n);
  }
  return m;
}

LaurentMatrix wedge2(const LaurentMatrix& theta) {
  const int n = static_cast<int>(theta.rows());
  LaurentMatrix m = laurent_zero(pairs_count(n), pairs_count(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<LaurentPoly> u, v;
      for (int j = 0; j < n; ++j) {
        u.push_back(theta(a, j));
        v.push_back(theta(b, j));
      }
      wedge_into<LaurentPoly>(u, v, m.row(pair_position(n, a, b)), n);
    }
  return m;
}

LaurentMatrix phi_conjugated(const VertexSet& x, const BraidWord& delta, int n) {
  if (!is_pure(delta, n)) throw ValidationError("conjugation formula needs a pure conjugator");
  return laurent_product(laurent_product(gassner(delta.inverse(), n), phi_AX(x, n)), wedge2(gassner(delta, n)));
}

std::vector<ExactScalar> MonodromyInput::to_strands(std::span<const ExactScalar> t) const {
  check_point(t, n);
  if (labels.empty()) return {t.begin(), t.end()};
  std::vector<ExactScalar> out;
  for (int h : labels) out.push_back(t[static_cast<std::size_t>(h)]);
  return out;
}

BraidWord monodromy_braid(const MonodromyGen& gen, int n) {
  const VertexSet x = sorted_unique(gen.x);
  if (x.size() < 2 || x.front() < 0 || x.back() >= n) throw ValidationError("vertex set must have >= 2 strands in [n]");
  const auto perm = braid_permutation(gen.delta.inverse(), n);
  VertexSet y;
  for (int i : x) y.push_back(perm[static_cast<std::size_t>(i)]);
  return gen.delta.inverse() * full_twist(y) * gen.delta;
}

LaurentMatrix phi_gen(const MonodromyGen& gen, int n) { return phi_pure(monodromy_braid(gen, n), n); }

Lattice2 monodromy_lattice(const MonodromyInput& m) {
  const int n = m.n;
  if (n < 1) throw ValidationError("monodromy: n must be positive");
  std::vector<int> label = m.labels;
  if (label.empty()) {
    label.resize(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
  }
  if (static_cast<int>(label.size()) != n || std::set<int>(label.begin(), label.end()).size() != label.size() ||
      *std::min_element(label.begin(), label.end()) < 0 || *std::max_element(label.begin(), label.end()) >= n)
    throw ValidationError("monodromy labels must be a permutation of [n]");
  std::vector<std::vector<char>> met(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<VertexSet> flats;
  for (const auto& gen : m.generators) {
    gen.delta.validate(n);
    const VertexSet x = sorted_unique(gen.x);
    if (x.size() != gen.x.size() || x.size() < 2 || x.front() < 0 || x.back() >= n)
      throw ValidationError("vertex set must be >= 2 distinct strands in [n]");
    VertexSet h;
    for (int i : x) h.push_back(label[static_cast<std::size_t>(i)]);
    std::sort(h.begin(), h.end());
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = a + 1; b < h.size(); ++b) {
        auto& cell = met[static_cast<std::size_t>(h[a])][static_cast<std::size_t>(h[b])];
        if (cell) throw ValidationError("two vertex sets share a pair of strands");
        cell = 1;
      }
    if (h.size() >= 3) flats.push_back(h);
  }
  // Pairs that never meet must form parallel classes (an equivalence relation).
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> parallel;
  for (int a = 0; a < n; ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    VertexSet c{a};
    for (int b = a + 1; b < n; ++b)
      if (!met[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) c.push_back(b);
    for (int i : c) cls[static_cast<std::size_t>(i)] = static_cast<int>(parallel.size());
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t q = p + 1; q < c.size(); ++q)
        if (met[static_cast<std::size_t>(c[p])][static_cast<std::size_t>(c[q])])
          throw ValidationError("pairs missing from the vertex sets are not a parallelism");
    parallel.push_back(std::move(c));
  }
  std::vector<VertexSet> classes;
  for (auto& c : parallel)
    if (c.size() >= 2) classes.push_back(std::move(c));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!met[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
          cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)])
        throw ValidationError("pairs missing from the vertex sets are not a parallelism");
  return make_lattice(n, std::move(flats), std::move(classes));
}

void check_monodromy(const MonodromyInput& m, const Lattice2& lat) {
  if (!(monodromy_lattice(m) == make_lattice(lat.n, lat.flats, lat.parallel)))
    throw ValidationError("monodromy vertex sets do not reproduce the lattice");
}

LaurentMatrix resolution_d(int k, int n) {
  Vector<LaurentPoly> t(n);
  for (int i = 0; i < n; ++i) t(i) = LaurentPoly::variable(n, i);
  LaurentMatrix d = resolution_d_at<LaurentPoly>(k, n, t);
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) d(i, j) += LaurentPoly(n, Rational(0));
  return d;
}

namespace {

VertexSet primed(const VertexSet& x) { return {x.begin() + 1, x.end()}; }

}  // namespace

LaurentMatrix delta_presentation(const MonodromyInput& m) {
  if (m.n > 8) throw CapExceeded("symbolic presentation only for n <= 8");
  monodromy_lattice(m);
  std::vector<LaurentMatrix> blocks;
  Index rows = 0;
  for (const auto& gen : m.generators) {
    const LaurentMatrix phi = phi_gen(gen, m.n);
    const VertexSet x = sorted_unique(gen.x);
    LaurentMatrix b(static_cast<Index>(x.size()) - 1, pairs_count(m.n));
    Index r = 0;
    for (int i : primed(x)) b.row(r++) = phi.row(i);
    rows += b.rows();
    blocks.push_back(std::move(b));
  }
  LaurentMatrix out = m.n >= 3 ? resolution_d(3, m.n) : laurent_zero(0, pairs_count(m.n));
  LaurentMatrix full(rows + out.rows(), pairs_count(m.n));
  Index r = 0;
  for (const auto& b : blocks) {
    full.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  full.bottomRows(out.rows()) = out;
  return full;
}

LaurentMatrix partial2(const MonodromyInput& m) {
  if (m.n > 8) throw CapExceeded("symbolic presentation only for n <= 8");
  const LaurentMatrix d = delta_presentation(m);
  const Index b = d.rows() - (m.n >= 3 ? Index(m.n) * (m.n - 1) * (m.n - 2) / 6 : 0);
  return laurent_product(d.topRows(b), resolution_d(2, m.n));
}

AlexanderPresentation::AlexanderPresentation(const MonodromyInput& m) : m_(m) {
  monodromy_lattice(m_);
  for (const auto& gen : m_.generators) {
    const auto img = artin_images(monodromy_braid(gen, m_.n), m_.n);
    for (int i : primed(sorted_unique(gen.x)))
      rows_.push_back(Row{i, conjugator_nabla(img[static_cast<std::size_t>(i)], i, m_.n)});
  }
}

std::vector<ExactScalar> AlexanderPresentation::strand_point(std::span<const ExactScalar> t) const {
  return m_.to_strands(t);
}

ExactMatrix AlexanderPresentation::phi_rows_at(std::span<const ExactScalar> t) const {
  const auto s = strand_point(t);
  const int n = m_.n;
  PointEvaluator ev(s);
  ExactMatrix out = ExactMatrix::Constant(b(), pairs_count(n), ExactScalar(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<ExactScalar> v, e(static_cast<std::size_t>(n), ExactScalar(0));
    for (const auto& term : rows_[r].nabla) v.push_back(ev(term));
    e[static_cast<std::size_t>(rows_[r].i)] = ExactScalar(1);
    wedge_into<ExactScalar>(e, v, out.row(static_cast<Index>(r)), n);
  }
  return out;
}

ExactMatrix AlexanderPresentation::delta_at(std::span<const ExactScalar> t) const {
  const ExactMatrix phi = phi_rows_at(t);
  if (m_.n < 3) return phi;
  const auto s = strand_point(t);
  return vstack(phi, resolution_d_at<ExactScalar>(3, m_.n, ExactVector::Map(s.data(), m_.n)));
}

ExactMatrix AlexanderPresentation::partial2_at(std::span<const ExactScalar> t) const {
  const auto s = strand_point(t);
  if (m_.n < 2) return ExactMatrix(b(), m_.n);
  return sparse_product(phi_rows_at(t), resolution_d_at<ExactScalar>(2, m_.n, ExactVector::Map(s.data(), m_.n)));
}

Membership AlexanderPresentation::membership(std::span<const ExactScalar> t, int k) const {
  const auto s = strand_point(t);
  const int n = m_.n;
  const bool at_one = std::all_of(s.begin(), s.end(), [](const ExactScalar& x) { return x.is_one(); });
  Membership out;
  out.rank_delta = rank(delta_at(t));
  out.rank_partial2 = rank(partial2_at(t));
  out.delta = out.rank_delta <= pairs_count(n) - k;
  const Index h1 = n - out.rank_partial2 - (at_one ? 0 : 1);
  out.partial2 = h1 >= k;
  out.agree = out.delta == out.partial2;
  out.range_n = std::min<long>(n, static_cast<long>(pairs_count(n)) - b());
  out.comparable = !at_one && k >= 1 && k <= out.range_n;
  out.in_vk = out.delta;
  return out;
}

ExactMatrix delta_presentation_at(const MonodromyInput& m, std::span<const ExactScalar> t) {
  return AlexanderPresentation(m).delta_at(t);
}

ExactMatrix partial2_at(const MonodromyInput& m, std::span<const ExactScalar> t) {
  return AlexanderPresentation(m).partial2_at(t);
}

Membership in_charvar(const MonodromyInput& m, std::span<const ExactScalar> t, int k) {
  return AlexanderPresentation(m).membership(t, k);
}

namespace {

LaurentPoly determinant(const LaurentMatrix& a) {
  const Index s = a.rows();
  if (s == 1) return a(0, 0);
  LaurentPoly d;
  for (Index c = 0; c < s; ++c) {
    if (a(0, c).is_zero()) continue;
    LaurentMatrix minor(s - 1, s - 1);
    for (Index r = 1; r < s; ++r)
      for (Index q = 0, cc = 0; q < s; ++q)
        if (q != c) minor(r - 1, cc++) = a(r, q);
    const LaurentPoly term = a(0, c) * determinant(minor);
    d = c % 2 ? d - term : d + term;
  }
  return d;
}

void subsets(Index n, Index s, Index start, std::vector<Index>& cur, std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(cur.size()) == s) {
    out.push_back(cur);
    return;
  }
  for (Index i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, s, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LaurentPoly> fitting_generators(const LaurentMatrix& m, int k, int cap) {
  const Index p = m.rows(), q = m.cols();
  if (k > q) return {LaurentPoly(1)};
  const Index s = q - k + 1;
  if (k <= 0 || s > p) return {};
  if (s > cap) throw CapExceeded("minor size " + std::to_string(s) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::vector<Index>> rs, cs;
  std::vector<Index> cur;
  subsets(p, s, 0, cur, rs);
  subsets(q, s, 0, cur, cs);
  std::vector<LaurentPoly> out;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      LaurentMatrix a(s, s);
      for (Index i = 0; i < s; ++i)
        for (Index j = 0; j < s; ++j) a(i, j) = m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
      LaurentPoly d = determinant(a);
      if (d.is_zero()) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const LaurentPoly& x) { return x == d || x == -d; });
      if (!seen) out.push_back(std::move(d));
    }
  return out;
}

MonodromyInput pencil_monodromy(int n) {
  if (n < 2) throw ValidationError("pencil needs n >= 2");
  MonodromyInput m;
  m.n = n;
  VertexSet x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 0);
  m.generators.push_back({x, {}});
  return m;
}

MonodromyInput generic_monodromy(int n) {
  if (n < 1) throw ValidationError("generic arrangement needs n >= 1");
  MonodromyInput m;
  m.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m.generators.push_back({{a, b}, {}});
  return m;
}

}  // namespace charvar
