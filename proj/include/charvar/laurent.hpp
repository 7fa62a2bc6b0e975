#ifndef CHARVAR_LAURENT_HPP
#define CHARVAR_LAURENT_HPP

#include "charvar/cyclotomic.hpp"
#include "charvar/linalg.hpp"
#include "charvar/rational.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace charvar {

using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial with rational coefficients, an
/// element of Q[t_1^{+-1}, ..., t_n^{+-1}].
///
/// Zero coefficients are never stored and terms are kept in lexicographic
/// exponent order, so structural equality is polynomial equality. A
/// default-constructed value is the zero polynomial in zero variables; it
/// widens to the variable count of whatever it is combined with.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) : LaurentPoly(0, c) {}  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}      // NOLINT(implicit)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}       // NOLINT(implicit)
  LaurentPoly(int nvars, const Rational& c);

  static LaurentPoly variable(int nvars, int i);
  static LaurentPoly monomial(Exponent exps, const Rational& coeff = 1);
  /// t^exps - 1, the usual Fitting-ideal building block.
  static LaurentPoly monomial_minus_one(Exponent exps);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Substitutes t_i -> point[i]. Throws std::domain_error if a coordinate
  /// that appears with a non-zero exponent vanishes.
  ExactScalar eval(std::span<const ExactScalar> point) const;

  /// e.g. "t1*t2^-1 - 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void widen(int n);
  void add_term(const Exponent& e, const Rational& c);

  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

using LaurentMatrix = Matrix<LaurentPoly>;

/// Entrywise substitution; requires every coordinate of the point to be
/// non-zero (the point must lie in the torus).
ExactMatrix laurent_eval(const LaurentMatrix& m, std::span<const ExactScalar> point);

/// Matrix of LaurentPoly zeros with the given shape.
LaurentMatrix laurent_zero(Index rows, Index cols);
LaurentMatrix laurent_identity(Index n);

/// Product computed entrywise with sparse skipping of zero entries.
LaurentMatrix laurent_product(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace charvar

namespace Eigen {

template <>
struct NumTraits<charvar::LaurentPoly> : GenericNumTraits<charvar::LaurentPoly> {
  using Real = charvar::LaurentPoly;
  using NonInteger = charvar::LaurentPoly;
  using Literal = charvar::LaurentPoly;
  using Nested = charvar::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 512
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // CHARVAR_LAURENT_HPP
