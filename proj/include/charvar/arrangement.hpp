#ifndef CHARVAR_ARRANGEMENT_HPP
#define CHARVAR_ARRANGEMENT_HPP

#include "charvar/cyclotomic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace charvar {

/// Sorted hyperplane indices (0-based) through a rank-two flat.
using VertexSet = std::vector<int>;

enum class Flavor { affine2, central3 };

/// (a, b, c): the line ax + by = c (affine2) or the plane ax1 + bx2 + cx3 = 0
/// (central3).
struct Hyperplane {
  std::array<ExactScalar, 3> coeffs;
};

struct Arrangement {
  Flavor flavor = Flavor::central3;
  std::vector<Hyperplane> hyperplanes;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(hyperplanes.size()); }
};

/// Rank-two part of the intersection lattice. Only flats of multiplicity at
/// least three are stored; any pair of hyperplanes in no stored flat is a
/// double point, unless both lie in one parallel class (affine arrangements
/// only: such lines do not meet).
struct Lattice2 {
  int n = 0;
  std::vector<VertexSet> flats;
  std::vector<VertexSet> parallel;

  friend bool operator==(const Lattice2&, const Lattice2&) = default;
};

/// Sorts each flat and the flat list, drops flats of size < 3 and checks that
/// no pair lies in two flats (or in a flat and a parallel class). Throws
/// ValidationError.
Lattice2 make_lattice(int n, std::vector<VertexSet> flats, std::vector<VertexSet> parallel = {});

/// Every rank-two flat, double points included, in lexicographic order.
std::vector<VertexSet> all_flats(const Lattice2& lat);

/// n x n table: index into lat.flats of the flat containing {i, j}, -1 for a
/// double point, -2 for a parallel pair.
std::vector<std::vector<int>> pair_flat_table(const Lattice2& lat);

/// Second Betti number: sum over all rank-two flats X of |X| - 1.
long b2(const Lattice2& lat);

/// Relabels hyperplanes so that lat's flats read in the new order; perm[new] =
/// old.
Lattice2 permute_lattice(const Lattice2& lat, const std::vector<int>& perm);

Lattice2 lattice_from_affine(const Arrangement& arr);
Lattice2 lattice_from_central3(const Arrangement& arr);
Lattice2 lattice_of(const Arrangement& arr);

/// No two lines parallel. Meaningful for affine2 only.
bool transverse_to_infinity(const Arrangement& arr);

struct Deconed {
  Arrangement affine;
  std::vector<int> index_map;  ///< affine index -> central index
  int at_infinity = -1;
};

/// Sends hyperplane `at` (default: last) to infinity.
Deconed decone(const Arrangement& arr, std::optional<int> at = std::nullopt);

/// Projective closure: ax + by = c becomes ax + by - cz = 0; z = 0 is appended
/// last.
Arrangement cone(const Arrangement& arr);

/// Appends t_n = (t_1 ... t_{n-1})^{-1}.
std::vector<ExactScalar> lift_membership_point(const std::vector<ExactScalar>& t);
/// Inverse of lift_membership_point: drops t_n, which must equal
/// (t_1 ... t_{n-1})^{-1}. Throws ValidationError otherwise.
std::vector<ExactScalar> decone_membership_point(const std::vector<ExactScalar>& t);

struct FamilySpec {
  std::string name;  ///< braid, monomial, full_monomial, diamond, hessian, falk_pair, pencil, generic
  int r = 0;
  int l = 0;
  int n = 0;  ///< pencil / generic size
};

struct Fixture {
  std::string name;
  std::optional<Arrangement> arrangement;
  Lattice2 lattice;
  std::vector<std::string> labels;
};

/// Builds the requested family. falk_pair yields two fixtures, everything
/// else one. Throws ValidationError on an unknown name or bad parameters.
std::vector<Fixture> gen_family(const FamilySpec& spec);

std::string flat_to_string(const VertexSet& x);  // 1-based, e.g. "{1,2,3}"

}  // namespace charvar

#endif  // CHARVAR_ARRANGEMENT_HPP
