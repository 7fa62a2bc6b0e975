#ifndef CHARVAR_RATIONAL_HPP
#define CHARVAR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace charvar {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (guaranteed by the GMP backend). Expression templates are off
/// so the type composes cleanly with Eigen's dense kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace charvar

namespace Eigen {

template <>
struct NumTraits<charvar::Rational> : GenericNumTraits<charvar::Rational> {
  using Real = charvar::Rational;
  using NonInteger = charvar::Rational;
  using Literal = charvar::Rational;
  using Nested = charvar::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<charvar::Integer> : GenericNumTraits<charvar::Integer> {
  using Real = charvar::Integer;
  using NonInteger = charvar::Rational;
  using Literal = charvar::Integer;
  using Nested = charvar::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // CHARVAR_RATIONAL_HPP
