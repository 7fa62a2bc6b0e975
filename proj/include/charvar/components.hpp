#ifndef CHARVAR_COMPONENTS_HPP
#define CHARVAR_COMPONENTS_HPP

#include "charvar/arrangement.hpp"
#include "charvar/linalg.hpp"
#include "charvar/zlattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace charvar {

/// Blocks are sorted, pairwise disjoint, and listed by smallest element.
struct Partition {
  std::vector<VertexSet> blocks;

  VertexSet support() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Flats of the subarrangement on `support`: X intersected with the support
/// whenever that has at least two elements (double points included).
/// Parallel pairs are not flats.
std::vector<VertexSet> restricted_flats(const Lattice2& lat, const VertexSet& support);

/// |pi cap X| >= |X| - 1 implies X inside pi, for every restricted flat X.
/// Throws ValidationError if the blocks are not a partition of a subset of [n].
bool is_neighborly(const Lattice2& lat, const Partition& pi);

enum class ComponentKind { local, nonlocal };

/// A linear subspace of C^n given by integer equations.
struct SubspaceComponent {
  ComponentKind kind = ComponentKind::local;
  VertexSet support;  ///< local: the flat X; nonlocal: the subarrangement
  Partition partition;  ///< nonlocal only
  RationalMatrix equations;  ///< reduced row echelon form, rows scaled to primitive integers
  RationalMatrix basis;      ///< n x dim, primitive integer columns
  bool verified = false;

  int ambient() const { return static_cast<int>(basis.rows()); }
  Index dimension() const { return basis.cols(); }
  /// Not contained in any coordinate hyperplane.
  bool essential() const;
};

/// Subspace given by equations (n columns); fills canonical equations + basis.
SubspaceComponent subspace_from_equations(const RationalMatrix& equations, ComponentKind kind);

/// S_Pi: sum over the support, sum over each polychrome restricted flat, and
/// lambda_j = 0 off the support.
SubspaceComponent s_pi(const Lattice2& lat, const Partition& pi);

enum class FormStatus { identically_zero, degenerate_locus_only, nondegenerate };

struct FormReport {
  FormStatus status = FormStatus::identically_zero;
  /// Basis index pairs (u, v) with some non-zero component <b_u, b_v>_Pi.
  std::vector<std::pair<Index, Index>> failing_pairs;
};

/// Evaluates the 2x2 determinants of same-block coordinates on all basis
/// pairs. identically_zero when all vanish. Otherwise the status is
/// degenerate_locus_only, or nondegenerate when dim S_Pi = 2: then the form
/// is non-zero on the one basis pair, so no lambda has a non-proportional
/// partner.
FormReport pi_form_vanishes(const Partition& pi, const SubspaceComponent& s);

/// One component per flat of size >= k + 2: lambda_j = 0 off X and the sum
/// over X vanishes.
std::vector<SubspaceComponent> local_components(const Lattice2& lat, int k);

struct EnumerationOptions {
  int cap = 14;           ///< maximum number of hyperplanes
  int samples = 5;        ///< verification points per component
  std::uint64_t seed = 1;
};

struct EnumerationResult {
  std::vector<SubspaceComponent> components;
  /// S_Pi with a non-vanishing form and no emitted component containing it:
  /// reported, not verified, not emitted.
  std::vector<std::pair<SubspaceComponent, FormReport>> flagged;
  long supports_scanned = 0;
  long partitions_tested = 0;
};

/// Irreducible components of R^1(A): local components plus every S_Pi of a
/// non-trivial neighborly partition of a subarrangement with dim >= 2 and an
/// identically vanishing form; deduplicated, non-maximal ones dropped, each
/// verified by h1_dim >= 1 at random points. Throws CapExceeded if n > cap
/// and ValidationError for lattices with parallel classes.
EnumerationResult enumerate_first_resonance(const Lattice2& lat, const EnumerationOptions& opt = {});

/// rows(a) . basis(b) = 0, i.e. b inside a.
bool contains(const SubspaceComponent& a, const SubspaceComponent& b);

/// A subtorus of (C^*)^n: each row a means prod t_i^{a_i} = 1.
struct TorusComponent {
  int n = 0;
  IntegerMatrix equations;  ///< saturated, Hermite normal form

  Index dimension() const { return n - equations.rows(); }
  /// e.g. "t1*t2*t5=1", "t1=t4".
  std::vector<std::string> monomial_equations() const;
};

TorusComponent torus_from_equations(int n, const IntegerMatrix& equations);

/// exp of a rational subspace: the subtorus whose character lattice is the
/// integer annihilator of the subspace.
TorusComponent exponentiate(const SubspaceComponent& s);

/// (C^*)^m, no equations.
TorusComponent full_torus(int m);

/// Positive-dimensional part of V_k of the free group F_m: the whole torus
/// for 1 <= k <= m - 1, nothing otherwise.
std::vector<TorusComponent> free_group_components(int m, int k);

/// V(M1 x M2) from V(M1), V(M2): each torus extended by t = 1 on the other
/// block.
std::vector<TorusComponent> product_components(const std::vector<TorusComponent>& first, int n1,
                                               const std::vector<TorusComponent>& second, int n2);

bool same_torus(const TorusComponent& a, const TorusComponent& b);

std::string monomial_string(const IntegerMatrix& row_vector);

}  // namespace charvar

#endif  // CHARVAR_COMPONENTS_HPP
