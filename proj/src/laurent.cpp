#include "charvar/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charvar {

LaurentPoly::LaurentPoly(int nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exponent(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("Laurent variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponent exps, const Rational& coeff) {
  LaurentPoly p;
  p.nvars_ = static_cast<int>(exps.size());
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

LaurentPoly LaurentPoly::monomial_minus_one(Exponent exps) {
  const int n = static_cast<int>(exps.size());
  return monomial(std::move(exps)) - LaurentPoly(n, 1);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first) {
    if (e != 0) return false;
  }
  return true;
}

void LaurentPoly::widen(int n) {
  if (n <= nvars_) return;
  std::map<Exponent, Rational> wide;
  for (auto& [e, c] : terms_) {
    Exponent w = e;
    w.resize(static_cast<std::size_t>(n), 0);
    wide.emplace(std::move(w), c);
  }
  terms_ = std::move(wide);
  nvars_ = n;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  if (b.nvars_ > nvars_) widen(b.nvars_);
  if (b.nvars_ == nvars_) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
  } else {
    LaurentPoly bb = b;
    bb.widen(nvars_);
    for (const auto& [e, c] : bb.terms_) add_term(e, c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  return *this += -b;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
  const int n = std::max(nvars_, b.nvars_);
  LaurentPoly a = *this;
  LaurentPoly bb = b;
  a.widen(n);
  bb.widen(n);
  LaurentPoly out;
  out.nvars_ = n;
  Exponent e(static_cast<std::size_t>(n));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : bb.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  LaurentPoly aa = a;
  LaurentPoly bb = b;
  const int n = std::max(a.nvars_, b.nvars_);
  aa.widen(n);
  bb.widen(n);
  return aa.terms_ == bb.terms_;
}

ExactScalar LaurentPoly::eval(std::span<const ExactScalar> point) const {
  if (static_cast<int>(point.size()) < nvars_) throw std::invalid_argument("evaluation point has too few coordinates");
  ExactScalar sum(0);
  for (const auto& [e, c] : terms_) {
    ExactScalar term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i].is_zero()) throw std::domain_error("Laurent evaluation at a point outside the torus");
      term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << charvar::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << charvar::to_string(mag) << '*' << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

ExactMatrix laurent_eval(const LaurentMatrix& m, std::span<const ExactScalar> point) {
  for (const auto& t : point) {
    if (t.is_zero()) throw std::domain_error("evaluation point must lie in the torus (zero coordinate)");
  }
  ExactMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(point);
  return out;
}

LaurentMatrix laurent_zero(Index rows, Index cols) {
  return LaurentMatrix::Constant(rows, cols, LaurentPoly());
}

LaurentMatrix laurent_identity(Index n) {
  LaurentMatrix m = laurent_zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix laurent_product(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("laurent_product: shape mismatch");
  LaurentMatrix out = laurent_zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

}  // namespace charvar
