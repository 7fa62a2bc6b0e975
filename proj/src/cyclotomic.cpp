#include "charvar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charvar {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic; returns quotient.
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic(unsigned m);

struct PolyCache {
  std::mutex mutex;
  std::map<unsigned, std::vector<long>> table;
};

PolyCache& cache() {
  static PolyCache c;
  return c;
}

std::vector<long> compute_cyclotomic(unsigned m) {
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

/// Reduces a polynomial modulo the monic Phi_m in place and resizes it to
/// phi(m) coordinates.
void reduce_mod(std::vector<Rational>& poly, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
  }
  poly.resize(deg);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.table.find(m); it != c.table.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);
  std::lock_guard lock(c.mutex);
  return c.table.emplace(m, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic(unsigned m, std::vector<Rational> coeffs) : order_(m), coeffs_(std::move(coeffs)) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (coeffs_.size() < euler_phi(m)) coeffs_.resize(euler_phi(m));
  reduce_mod(coeffs_, m);
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  long e = k % static_cast<long>(m);
  if (e < 0) e += m;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(m, std::move(c));
}

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  coeffs_.resize(1);
  order_ = 1;
}

bool Cyclotomic::is_zero() const {
  return order_ == 1 && coeffs_[0] == 0;
}

bool Cyclotomic::is_one() const {
  return order_ == 1 && coeffs_[0] == 1;
}

const Rational& Cyclotomic::to_rational() const {
  if (order_ != 1) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::invalid_argument("promotion target must be a multiple of the order");
  const unsigned step = target / order_;
  std::vector<Rational> poly(static_cast<std::size_t>((coeffs_.size() - 1) * step) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  Cyclotomic out;
  out.order_ = target;
  if (poly.size() < euler_phi(target)) poly.resize(euler_phi(target));
  reduce_mod(poly, target);
  out.coeffs_ = std::move(poly);
  return out;  // not normalized: callers operate in Q(zeta_target)
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (order_ == b.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  } else {
    const unsigned m = std::lcm(order_, b.order_);
    Cyclotomic a = promoted(m);
    const Cyclotomic bb = b.promoted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += bb.coeffs_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  return *this += -b;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  if (b.order_ == 1) {
    for (auto& c : coeffs_) c *= b.coeffs_[0];
    normalize();
    return *this;
  }
  if (order_ == 1) {
    const Rational s = coeffs_[0];
    *this = b;
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  const unsigned m = std::lcm(order_, b.order_);
  const Cyclotomic a = promoted(m);
  const Cyclotomic bb = b.promoted(m);
  std::vector<Rational> prod(a.coeffs_.size() + bb.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bb.coeffs_.size(); ++j) {
      if (bb.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * bb.coeffs_[j];
    }
  }
  reduce_mod(prod, m);
  order_ = m;
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this) * x = 1 on the power basis.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1));
  std::vector<Rational> col(coeffs_.begin(), coeffs_.end());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) aug[i][j] = col[i];
    // col <- col * x mod Phi_m
    std::vector<Rational> shifted(d + 1);
    for (std::size_t i = 0; i < d; ++i) shifted[i + 1] = col[i];
    reduce_mod(shifted, order_);
    col = std::move(shifted);
  }
  aug[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;  // the multiplication matrix is invertible
    std::swap(aug[p], aug[c]);
    const Rational inv = Rational(1) / aug[c][c];
    for (std::size_t k = c; k <= d; ++k) aug[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = c; k <= d; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = aug[i][d];
  return Cyclotomic(order_, std::move(x));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) {
  return *this *= b.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  // Normalized values of different order can still coincide, e.g. zeta_6
  // and -zeta_3^2.
  const unsigned m = std::lcm(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::size_t Cyclotomic::support_size() const {
  std::size_t s = 0;
  for (const auto& c : coeffs_) s += (c != 0);
  return s;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return charvar::to_string(coeffs_[0]);
  std::ostringstream os;
  os << '[' << order_ << ':';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : " ") << charvar::to_string(coeffs_[i]);
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

unsigned common_order(std::span<const Cyclotomic> values) {
  unsigned m = 1;
  for (const auto& v : values) m = std::lcm(m, v.order());
  return m;
}

}  // namespace charvar
