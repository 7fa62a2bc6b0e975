#ifndef CHARVAR_CYCLOTOMIC_HPP
#define CHARVAR_CYCLOTOMIC_HPP

#include "charvar/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace charvar {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
/// first. Results are memoized; safe to call from several threads.
const std::vector<long>& cyclotomic_polynomial(unsigned m);

/// Euler's totient, i.e. the degree of the m-th cyclotomic polynomial.
unsigned euler_phi(unsigned m);

/// An element of the cyclotomic field Q(zeta_m), stored on the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) of Q[x]/Phi_m(x).
///
/// Binary operations on operands of different orders promote both sides to
/// Q(zeta_lcm) first. Results whose only non-zero coordinate is the constant
/// term are demoted to order 1, so rational arithmetic stays cheap and two
/// equal values always compare equal regardless of how they were built.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& q) : order_(1), coeffs_{q} {}  // NOLINT(implicit)
  Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}   // NOLINT(implicit)
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}   // NOLINT(implicit)

  /// Builds sum coeffs[i] zeta_m^i. Any length is accepted; the polynomial is
  /// reduced modulo Phi_m. Throws std::invalid_argument when m == 0.
  Cyclotomic(unsigned m, std::vector<Rational> coeffs);

  /// zeta_m^k for any integer k.
  static Cyclotomic root_of_unity(unsigned m, long k);

  unsigned order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  /// Throws std::domain_error unless is_rational().
  const Rational& to_rational() const;

  /// Same value re-expressed in Q(zeta_target); target must be a multiple of
  /// order().
  Cyclotomic promoted(unsigned target) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Number of non-zero power-basis coordinates; a cheap cost model for
  /// pivot selection.
  std::size_t support_size() const;

  /// Canonical text: "p/q" for rationals, otherwise "[m: c0, c1, ...]".
  std::string to_string() const;

 private:
  void normalize();

  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// The single exact scalar type shared by every evaluated matrix.
using ExactScalar = Cyclotomic;

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Smallest order m with every entry in Q(zeta_m).
unsigned common_order(std::span<const Cyclotomic> values);

}  // namespace charvar

namespace Eigen {

template <>
struct NumTraits<charvar::Cyclotomic> : GenericNumTraits<charvar::Cyclotomic> {
  using Real = charvar::Cyclotomic;
  using NonInteger = charvar::Cyclotomic;
  using Literal = charvar::Cyclotomic;
  using Nested = charvar::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // CHARVAR_CYCLOTOMIC_HPP
