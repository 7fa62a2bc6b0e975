#ifndef CHARVAR_OSRES_HPP
#define CHARVAR_OSRES_HPP

#include "charvar/arrangement.hpp"
#include "charvar/errors.hpp"
#include "charvar/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace charvar {

/// Sorted r-subsets of {0..n-1} in lexicographic order; the basis e_J of E^r.
/// Wedge sign convention: e_a ^ e_b = +e_{ab} for a < b.
class ExteriorBasis {
 public:
  ExteriorBasis(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  Index size() const { return static_cast<Index>(subsets_.size()); }
  const VertexSet& operator[](Index i) const { return subsets_[static_cast<std::size_t>(i)]; }
  const std::vector<VertexSet>& subsets() const { return subsets_; }
  /// Position of a sorted subset.
  Index index(const VertexSet& j) const { return index_.at(j); }

 private:
  int n_;
  int degree_;
  std::vector<VertexSet> subsets_;
  std::map<VertexSet, Index> index_;
};

/// Position of e_{ab}, a < b, in ExteriorBasis(n, 2).
inline Index pair_position(int n, int a, int b) { return Index(a) * n - Index(a) * (a + 1) / 2 + (b - a - 1); }

/// nbc basis of A^2 together with the projection p : E^2 -> A^2.
struct NbcBasis2 {
  struct Broken {
    std::pair<int, int> pair;
    int flat;  ///< index into Lattice2::flats
  };
  std::vector<std::pair<int, int>> pairs;  ///< nbc pairs (a_j ^ a_k basis of A^2)
  std::vector<Broken> broken;
  /// dim A^2 x C(n,2); column e_{jk} is the nbc expansion of a_j ^ a_k.
  RationalMatrix projection;
};

/// Broken pairs are {j,k} inside a flat X with min X < j; they expand as
/// a_j^a_k = a_i^a_k - a_i^a_j with i = min X. Pairs of parallel lines vanish.
NbcBasis2 nbc_basis(const Lattice2& lat);

/// One row e_i ^ sum_{j in X} e_j per rank-two flat X (double points
/// included) and i in X minus min X; columns indexed by E^2.
template <typename Scalar = Rational>
Matrix<Scalar> phi_one(const Lattice2& lat);

/// The differential d_k of the Koszul-type resolution of Z over Lambda
/// evaluated at t: row J (a k-subset) has entry (-1)^r (t_{j_r} - 1) in column
/// J \ {j_r}, r = 1..k. For k = 1 the sign is dropped so that d_1 equals the
/// boundary map (t_1 - 1, ..., t_n - 1)^T of the cover.
template <typename Scalar>
Matrix<Scalar> resolution_d_at(int k, int n, const Vector<Scalar>& t) {
  if (k < 1 || k > n) throw ValidationError("resolution_d: k out of range");
  const ExteriorBasis rows(n, k), cols(n, k - 1);
  Matrix<Scalar> d = Matrix<Scalar>::Constant(rows.size(), cols.size(), Scalar(0));
  for (Index a = 0; a < rows.size(); ++a) {
    const VertexSet& j = rows[a];
    for (std::size_t r = 0; r < j.size(); ++r) {
      VertexSet rest = j;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
      const Scalar v = t(j[r]) - Scalar(1);
      d(a, cols.index(rest)) = (r % 2 == 0 && k > 1) ? Scalar(-v) : v;  // (-1)^(r+1) with r 0-based
    }
  }
  return d;
}

/// delta_k(lambda) = d_k(1 - lambda).
template <typename Scalar>
Matrix<Scalar> delta_k(int k, int n, const Vector<Scalar>& lambda) {
  Vector<Scalar> t(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i) t(i) = Scalar(1) - lambda(i);
  return resolution_d_at(k, n, t);
}

template <typename Scalar>
Matrix<Scalar> delta3(int n, const Vector<Scalar>& lambda) {
  return delta_k(3, n, lambda);
}

template <typename Scalar>
Matrix<Scalar> delta2(int n, const Vector<Scalar>& lambda) {
  return delta_k(2, n, lambda);
}

/// Matrix of e_i -> omega ^ e_i, E^1 -> E^2 (C(n,2) x n, columns are images).
template <typename Scalar>
Matrix<Scalar> omega_wedge1(const Vector<Scalar>& lambda) {
  const int n = static_cast<int>(lambda.size());
  Matrix<Scalar> m = Matrix<Scalar>::Constant(Index(n) * (n - 1) / 2, n, Scalar(0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      if (a == i || detail::is_zero(lambda(a))) continue;
      if (a < i)
        m(pair_position(n, a, i), i) = lambda(a);
      else
        m(pair_position(n, i, a), i) = -lambda(a);
    }
  return m;
}

/// Matrix of e_J -> omega ^ e_J, E^2 -> E^3 (C(n,3) x C(n,2)). Coincides with
/// delta3(lambda) under the fixed sign convention.
template <typename Scalar>
Matrix<Scalar> omega_wedge2(const Vector<Scalar>& lambda) {
  const int n = static_cast<int>(lambda.size());
  const ExteriorBasis e2(n, 2), e3(n, 3);
  Matrix<Scalar> m = Matrix<Scalar>::Constant(e3.size(), e2.size(), Scalar(0));
  for (Index c = 0; c < e2.size(); ++c) {
    const int x = e2[c][0], y = e2[c][1];
    for (int a = 0; a < n; ++a) {
      if (a == x || a == y || detail::is_zero(lambda(a))) continue;
      // e_a moves past the members of {x, y} smaller than it.
      const int passes = (a > x) + (a > y);
      VertexSet j{a, x, y};
      std::sort(j.begin(), j.end());
      m(e3.index(j), c) = passes % 2 ? Scalar(-lambda(a)) : lambda(a);
    }
  }
  return m;
}

/// Precomputed OS / resonance data of one lattice; every test below in one
/// place so repeated queries do not rebuild P and Phi(1).
template <typename Scalar>
class ResonanceTester {
 public:
  explicit ResonanceTester(const Lattice2& lat)
      : lat_(lat), nbc_(nbc_basis(lat)), phi_(phi_one<Scalar>(lat)), p_(nbc_.projection.template cast<Scalar>()) {}

  const Lattice2& lattice() const { return lat_; }
  const NbcBasis2& nbc() const { return nbc_; }
  const Matrix<Scalar>& phi() const { return phi_; }
  Index pairs() const { return Index(lat_.n) * (lat_.n - 1) / 2; }

  /// rank of (Phi(1); delta3(lambda)).
  Index resonance_rank(const Vector<Scalar>& lambda) const {
    check(lambda, false);
    return rank(vstack(phi_, delta3(lat_.n, lambda)));
  }

  /// rank of (P; omega ^ . : E^2 -> E^3), built from OS data alone.
  Index os_rank(const Vector<Scalar>& lambda) const {
    check(lambda, false);
    return rank(vstack(p_, omega_wedge2(lambda)));
  }

  bool in_resonance(const Vector<Scalar>& lambda, int k) const {
    check(lambda, true);
    return resonance_rank(lambda) <= pairs() - k;
  }

  /// dim H^1(A, omega ^ .) = dim ker(A^1 -> A^2) - 1.
  Index h1_dim(const Vector<Scalar>& lambda) const {
    check(lambda, true);
    if (lat_.n == 0) return 0;
    return lat_.n - rank(sparse_product(p_, omega_wedge1(lambda))) - 1;
  }

  bool os_phi_transpose_check(const Vector<Scalar>& lambda) const { return resonance_rank(lambda) == os_rank(lambda); }

 private:
  void check(const Vector<Scalar>& lambda, bool nonzero) const {
    if (lambda.size() != lat_.n) throw ValidationError("lambda has the wrong length");
    if (nonzero && is_zero_matrix(lambda)) throw ValidationError("lambda = 0 is excluded; the origin lies in every locus");
  }

  Lattice2 lat_;
  NbcBasis2 nbc_;
  Matrix<Scalar> phi_;
  Matrix<Scalar> p_;
};

template <typename Scalar>
Index resonance_rank(const Lattice2& lat, const Vector<Scalar>& lambda) {
  return ResonanceTester<Scalar>(lat).resonance_rank(lambda);
}

template <typename Scalar>
bool in_resonance(const Lattice2& lat, const Vector<Scalar>& lambda, int k) {
  return ResonanceTester<Scalar>(lat).in_resonance(lambda, k);
}

template <typename Scalar>
Index h1_dim(const Lattice2& lat, const Vector<Scalar>& lambda) {
  return ResonanceTester<Scalar>(lat).h1_dim(lambda);
}

template <typename Scalar>
bool os_phi_transpose_check(const Lattice2& lat, const Vector<Scalar>& lambda) {
  return ResonanceTester<Scalar>(lat).os_phi_transpose_check(lambda);
}

/// At least one flat of multiplicity >= 3; otherwise R^1 = {0}.
inline bool has_nontrivial_alexander_invariant(const Lattice2& lat) { return !lat.flats.empty(); }

extern template Matrix<Rational> phi_one<Rational>(const Lattice2&);
extern template Matrix<ExactScalar> phi_one<ExactScalar>(const Lattice2&);

}  // namespace charvar

#endif  // CHARVAR_OSRES_HPP
