#ifndef CHARVAR_LINALG_HPP
#define CHARVAR_LINALG_HPP

#include "charvar/cyclotomic.hpp"
#include "charvar/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <type_traits>
#include <vector>

namespace charvar {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using ExactMatrix = Matrix<ExactScalar>;
using ExactVector = Vector<ExactScalar>;
using IntMatrix = Matrix<long>;

using Index = Eigen::Index;

namespace detail {

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

/// Pivot cost: smaller is preferred. Bit length for rationals, number of
/// non-zero power-basis coordinates (then bit length) for cyclotomics.
inline std::size_t pivot_cost(const Rational& q) {
  return msb(abs(numerator(q))) + msb(denominator(q));
}
inline std::size_t pivot_cost(const Cyclotomic& c) {
  std::size_t bits = 0;
  for (const auto& q : c.coeffs()) {
    if (q != 0) bits += pivot_cost(q);
  }
  return c.support_size() * 4096 + bits;
}

/// Scales a rational row so every entry is an integer; keeps Bareiss updates
/// inside Z.
template <typename Derived>
void clear_row_denominators(Eigen::MatrixBase<Derived>& row) {
  Integer l = 1;
  for (Index j = 0; j < row.size(); ++j) {
    if (row(j) != 0) l = lcm(l, Integer(denominator(row(j))));
  }
  if (l != 1) {
    const Rational s(l);
    for (Index j = 0; j < row.size(); ++j) row(j) *= s;
  }
}

}  // namespace detail

namespace detail {

inline bool is_zero(const Integer& z) { return z == 0; }
inline std::size_t pivot_cost(const Integer& z) { return z == 0 ? 0 : msb(abs(z)) + 1; }

/// Bareiss elimination in place; every division is exact. Returns the rank.
template <typename Scalar>
Index bareiss_rank(Matrix<Scalar>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_cost = 0;
    for (Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const std::size_t cost = pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const Scalar pivot = m(r, c);
    // Integers divide exactly; field elements multiply by one inverse per step.
    constexpr bool integral = std::is_same_v<Scalar, Integer>;
    const Scalar inv_prev = integral ? Scalar(1) : Scalar(Scalar(1) / prev);
    for (Index i = r + 1; i < rows; ++i) {
      const Scalar f = m(i, c);
      for (Index j = c + 1; j < cols; ++j) {
        const bool lhs = !is_zero(m(i, j));
        const bool rhs = !is_zero(f) && !is_zero(m(r, j));
        if (!lhs && !rhs) continue;
        Scalar v = lhs ? Scalar(pivot * m(i, j)) : Scalar(0);
        if (rhs) v -= f * m(r, j);
        if (!is_zero(v)) {
          if constexpr (integral)
            v /= prev;
          else
            v *= inv_prev;
        }
        m(i, j) = std::move(v);
      }
      m(i, c) = Scalar(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination. At each step the pivot
/// is the cheapest non-zero entry of the current column. Rational input is
/// scaled row-wise to integers first, so the elimination runs in Z.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    Matrix<Integer> z(input.rows(), input.cols());
    for (Index i = 0; i < input.rows(); ++i) {
      Integer l = 1;
      for (Index j = 0; j < input.cols(); ++j)
        if (input(i, j) != 0) l = lcm(l, Integer(denominator(input(i, j))));
      for (Index j = 0; j < input.cols(); ++j) z(i, j) = numerator(input(i, j)) * (l / denominator(input(i, j)));
    }
    return detail::bareiss_rank(z);
  } else {
    Matrix<Scalar> m = input;
    return detail::bareiss_rank(m);
  }
}

/// Reduced row echelon form with the pivot column list.
template <typename Scalar>
struct Rref {
  Matrix<Scalar> reduced;  ///< rows beyond pivots.size() are zero
  std::vector<Index> pivots;
};

template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Rref<Scalar> out{input, {}};
  auto& m = out.reduced;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_cost = 0;
    for (Index i = r; i < rows; ++i) {
      if (detail::is_zero(m(i, c))) continue;
      const std::size_t cost = detail::pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) {
      if (!detail::is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!detail::is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

/// Scales a rational vector to a primitive integer vector whose first
/// non-zero entry is positive.
inline RationalVector primitive_integer(RationalVector v) {
  auto row = v.transpose();
  detail::clear_row_denominators(row);
  Integer g = 0;
  Index lead = -1;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (lead < 0) lead = i;
    g = gcd(g, Integer(numerator(v(i))));
  }
  if (lead < 0) return v;
  if (v(lead) < 0) g = -g;
  for (Index i = 0; i < v.size(); ++i) v(i) /= Rational(g);
  return v;
}

/// Basis of {v : M v = 0}, one vector per free column of the RREF. Over Q
/// each vector is cleared to a primitive integer vector.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(input);
  const Index cols = input.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector<Scalar>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
      v(red.pivots[k]) = -red.reduced(static_cast<Index>(k), free);
    }
    if constexpr (std::is_same_v<Scalar, Rational>) v = primitive_integer(std::move(v));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact zero test (Eigen's isZero() relies on abs and a tolerance).
template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!detail::is_zero(m(i, j))) return false;
  return true;
}

/// A * B skipping zero entries of A; for sparse exact matrices this avoids
/// most big-number multiplications.
template <typename Scalar>
Matrix<Scalar> sparse_product(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (detail::is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!detail::is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Stacks column vectors into a matrix.
template <typename Scalar>
Matrix<Scalar> hstack(const std::vector<Vector<Scalar>>& columns, Index rows) {
  Matrix<Scalar> m(rows, static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Index>(j)) = columns[j];
  return m;
}

/// Vertical concatenation [top; bottom]; column counts must agree.
template <typename A, typename B>
Matrix<typename A::Scalar> vstack(const Eigen::MatrixBase<A>& top, const Eigen::MatrixBase<B>& bottom) {
  Matrix<typename A::Scalar> m(top.rows() + bottom.rows(), top.cols());
  if (top.rows() > 0) m.topRows(top.rows()) = top;
  if (bottom.rows() > 0) m.bottomRows(bottom.rows()) = bottom;
  return m;
}

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

inline ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Cyclotomic(m(i, j));
  return out;
}

}  // namespace charvar

#endif  // CHARVAR_LINALG_HPP
