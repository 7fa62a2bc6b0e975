#ifndef CHARVAR_ZLATTICE_HPP
#define CHARVAR_ZLATTICE_HPP

#include "charvar/linalg.hpp"

namespace charvar {

using IntegerMatrix = Matrix<Integer>;

/// Z-basis (as rows) of {v in Z^n : A v = 0}, by unimodular column reduction.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Row Hermite normal form: positive pivots, entries above a pivot reduced
/// into [0, pivot), zero rows dropped. Unique for a given row lattice.
IntegerMatrix hermite_normal_form(IntegerMatrix m);

/// Z-basis in Hermite normal form of (row space of E over Q) intersected
/// with Z^n.
IntegerMatrix saturate_rows(const IntegerMatrix& e);

/// Rational matrix with integral entries -> Integer matrix (throws otherwise).
IntegerMatrix to_integer(const RationalMatrix& m);
RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace charvar

#endif  // CHARVAR_ZLATTICE_HPP
