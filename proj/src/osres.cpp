#include "charvar/osres.hpp"

namespace charvar {

ExteriorBasis::ExteriorBasis(int n, int degree) : n_(n), degree_(degree) {
  if (degree < 0 || n < 0) throw ValidationError("exterior basis: negative size");
  if (degree > n) return;
  VertexSet j(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) j[i] = i;
  for (;;) {
    index_.emplace(j, static_cast<Index>(subsets_.size()));
    subsets_.push_back(j);
    int i = degree - 1;
    while (i >= 0 && j[i] == n - degree + i) --i;
    if (i < 0) break;
    ++j[i];
    for (int k = i + 1; k < degree; ++k) j[k] = j[k - 1] + 1;
  }
}

NbcBasis2 nbc_basis(const Lattice2& lat) {
  const int n = lat.n;
  const auto table = pair_flat_table(lat);
  NbcBasis2 out;
  std::vector<Index> row_of(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const int f = table[j][k];
      if (f == -2) continue;
      if (f >= 0 && lat.flats[f].front() < j) {
        out.broken.push_back({{j, k}, f});
        continue;
      }
      row_of[static_cast<std::size_t>(j * n + k)] = static_cast<Index>(out.pairs.size());
      out.pairs.emplace_back(j, k);
    }
  const Index cols = Index(n) * (n - 1) / 2;
  out.projection = RationalMatrix::Zero(static_cast<Index>(out.pairs.size()), cols);
  auto row = [&](int a, int b) { return row_of[static_cast<std::size_t>(a * n + b)]; };
  for (const auto& [j, k] : out.pairs) out.projection(row(j, k), pair_position(n, j, k)) = 1;
  for (const auto& br : out.broken) {
    const auto [j, k] = br.pair;
    const int i = lat.flats[br.flat].front();
    const Index c = pair_position(n, j, k);
    out.projection(row(i, k), c) += 1;
    out.projection(row(i, j), c) -= 1;
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> phi_one(const Lattice2& lat) {
  const int n = lat.n;
  const auto flats = all_flats(lat);
  Index rows = 0;
  for (const auto& x : flats) rows += static_cast<Index>(x.size()) - 1;
  Matrix<Scalar> m = Matrix<Scalar>::Constant(rows, Index(n) * (n - 1) / 2, Scalar(0));
  Index r = 0;
  for (const auto& x : flats) {
    for (std::size_t a = 1; a < x.size(); ++a, ++r) {
      const int i = x[a];
      for (int j : x) {
        if (j < i)
          m(r, pair_position(n, j, i)) = Scalar(-1);
        else if (j > i)
          m(r, pair_position(n, i, j)) = Scalar(1);
      }
    }
  }
  return m;
}

template Matrix<Rational> phi_one<Rational>(const Lattice2&);
template Matrix<ExactScalar> phi_one<ExactScalar>(const Lattice2&);

}  // namespace charvar
