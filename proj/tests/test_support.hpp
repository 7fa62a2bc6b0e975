#ifndef CHARVAR_TEST_SUPPORT_HPP
#define CHARVAR_TEST_SUPPORT_HPP

#include "charvar/linalg.hpp"

#include <random>

namespace charvar::testing {

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound = 9) {
  for (;;) {
    Rational q = random_rational(rng, bound);
    if (q != 0) return q;
  }
}

inline RationalMatrix random_rational_matrix(std::mt19937_64& rng, Index rows, Index cols, long bound = 5) {
  RationalMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
  return m;
}

/// Random matrix of prescribed rank r as a product of random factors.
inline RationalMatrix random_rank_matrix(std::mt19937_64& rng, Index rows, Index cols, Index r) {
  return random_rational_matrix(rng, rows, r) * random_rational_matrix(rng, r, cols);
}

inline ExactScalar random_cyclotomic(std::mt19937_64& rng, unsigned m, long bound = 4) {
  std::vector<Rational> c(euler_phi(m));
  for (auto& q : c) q = random_rational(rng, bound);
  return ExactScalar(m, std::move(c));
}

}  // namespace charvar::testing

#endif  // CHARVAR_TEST_SUPPORT_HPP
