#include "charvar/zlattice.hpp"

#include <stdexcept>

namespace charvar {

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 with s a + t b = g.
Integer xgcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * ss;
    old_s = ss;
    ss = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerMatrix integer_kernel(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  const Index m = a.rows(), n = a.cols();
  IntegerMatrix u = IntegerMatrix::Identity(n, n);
  Index p = 0;  // first column not yet holding a pivot
  for (Index i = 0; i < m && p < n; ++i) {
    for (Index c = p + 1; c < n; ++c) {
      if (a(i, c) == 0) continue;
      if (a(i, p) == 0) {
        a.col(p).swap(a.col(c));
        u.col(p).swap(u.col(c));
        continue;
      }
      Integer s, t;
      const Integer g = xgcd(a(i, p), a(i, c), s, t);
      const Integer x = a(i, p) / g, y = a(i, c) / g;
      // [col_p col_c] <- [col_p col_c] * [[s, -y], [t, x]], determinant 1.
      for (Index r = 0; r < m; ++r) {
        const Integer cp = a(r, p), cc = a(r, c);
        a(r, p) = s * cp + t * cc;
        a(r, c) = x * cc - y * cp;
      }
      for (Index r = 0; r < n; ++r) {
        const Integer cp = u(r, p), cc = u(r, c);
        u(r, p) = s * cp + t * cc;
        u(r, c) = x * cc - y * cp;
      }
    }
    if (a(i, p) != 0) ++p;
  }
  return u.rightCols(n - p).transpose();
}

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    for (Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.row(r).swap(m.row(i));
        continue;
      }
      Integer s, t;
      const Integer g = xgcd(m(r, c), m(i, c), s, t);
      const Integer x = m(r, c) / g, y = m(i, c) / g;
      for (Index j = 0; j < cols; ++j) {
        const Integer pr = m(r, j), pi = m(i, j);
        m(r, j) = s * pr + t * pi;
        m(i, j) = x * pi - y * pr;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) *= Integer(-1);
    for (Index i = 0; i < r; ++i) {
      if (m(i, c) == 0) continue;
      const Integer q = floor_div(m(i, c), m(r, c));
      for (Index j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  return m.topRows(r);
}

IntegerMatrix saturate_rows(const IntegerMatrix& e) {
  const IntegerMatrix k = integer_kernel(e);
  if (k.rows() == 0) return hermite_normal_form(IntegerMatrix::Identity(e.cols(), e.cols()));
  return hermite_normal_form(integer_kernel(k));
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) throw std::domain_error("to_integer: non-integral entry");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace charvar
