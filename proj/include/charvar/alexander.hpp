#ifndef CHARVAR_ALEXANDER_HPP
#define CHARVAR_ALEXANDER_HPP

#include "charvar/arrangement.hpp"
#include "charvar/laurent.hpp"
#include "charvar/linalg.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace charvar {

/// Freely reduced word in F_n. A letter is +-(i + 1) for the generator
/// gamma_i (0-based i), the sign giving the exponent.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters);  ///< reduces

  static FreeWord generator(int i);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord& operator*=(const FreeWord& b);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Exponent sums, the image in Z^n.
  Exponent abelianization(int n) const;
  /// e.g. "g1 g2^-1"; "1" for the empty word.
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// A factor of a braid word: A_{i,j}^exp (i < j, 0-based), or the half twist
/// sigma_i^exp exchanging strands i and i + 1 (j unused).
struct BraidFactor {
  enum class Kind { pure, half };
  Kind kind = Kind::pure;
  int i = 0;
  int j = 1;
  int exp = 1;

  static BraidFactor A(int i, int j, int exp = 1) { return {Kind::pure, i, j, exp}; }
  static BraidFactor sigma(int i, int exp = 1) { return {Kind::half, i, i + 1, exp}; }
  friend bool operator==(const BraidFactor&, const BraidFactor&) = default;
};

/// Braid word acting on the right: the word f_1 f_2 ... f_m acts by
/// f_m o ... o f_1, so the first factor acts first and
/// apply(b1 b2, w) = apply(b2, apply(b1, w)). Under this order the positive
/// word of full_twist is the full twist (conjugation by g_1 ... g_n for
/// X = [n]) and Theta(b1 b2) = Theta(b1) Theta(b2) as row matrices.
///
/// Artin action of the generators:
///   A_{ij}(g_i) = (g_i g_j) g_i (g_i g_j)^-1,  A_{ij}(g_j) = (g_i g_j) g_j (g_i g_j)^-1,
///   A_{ij}(g_k) = C g_k C^-1 with C = [g_i, g_j] = g_i g_j g_i^-1 g_j^-1 for i < k < j,
///   sigma_i(g_i) = g_i g_{i+1} g_i^-1,  sigma_i(g_{i+1}) = g_i,
/// every other generator fixed. With left Fox derivatives this is the choice
/// under which Theta(alpha) - id = d_2 Phi(alpha).
struct BraidWord {
  std::vector<BraidFactor> factors;

  BraidWord inverse() const;
  BraidWord& operator*=(const BraidWord& b);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  std::size_t size() const { return factors.size(); }
  /// Throws ValidationError on indices outside [n] or a zero exponent.
  void validate(int n) const;
};

/// A_{ij}^exp (exp = +-1) as half twists (k, +-1), first factor first:
/// sigma_{j-1} ... sigma_{i+1} sigma_i^{2 exp} sigma_{i+1}^-1 ... sigma_{j-1}^-1.
std::vector<std::pair<int, int>> pure_generator_in_half_twists(int i, int j, int exp);

FreeWord artin_apply(const BraidWord& beta, const FreeWord& w, int n);
/// beta(g_0), ..., beta(g_{n-1}).
std::vector<FreeWord> artin_images(const BraidWord& beta, int n);

/// perm[i] = j when beta(g_i) is a conjugate of g_j.
std::vector<int> braid_permutation(const BraidWord& beta, int n);
bool is_pure(const BraidWord& beta, int n);

/// Abelianized left Fox derivatives of w: entry j maps exponent vectors to
/// integer coefficients of (dw/dg_j)^ab.
std::vector<std::map<Exponent, long>> fox_terms(const FreeWord& w, int n);

/// n x n matrix whose row i is Theta(beta)(e_i) = sum_j (d beta(g_i) / d g_j)^ab e_j.
LaurentMatrix gassner(const BraidWord& beta, int n);
ExactMatrix gassner_at(const BraidWord& beta, int n, std::span<const ExactScalar> t);

/// (A_{i1 i2})(A_{i1 i3} A_{i2 i3}) ... (A_{i1 ir} ... A_{i(r-1) ir}).
BraidWord full_twist(const VertexSet& x);

/// Three-case formula for Phi(A_X): n x C(n,2), row i is Phi(e_i).
LaurentMatrix phi_AX(const VertexSet& x, int n);

/// Phi of a pure braid from its Artin images: alpha(g_i) = z_i g_i z_i^-1
/// gives Phi(e_i) = e_i ^ nabla(z_i). Throws ValidationError if alpha is not
/// pure. Phi is only determined modulo im d_3; phi_AX and this choice differ
/// there on the rows of interior non-members.
LaurentMatrix phi_pure(const BraidWord& alpha, int n);
ExactMatrix phi_pure_at(const BraidWord& alpha, int n, std::span<const ExactScalar> t);

/// Row matrix of wedge^2 Theta: row (a,b) is Theta(e_a) ^ Theta(e_b).
LaurentMatrix wedge2(const LaurentMatrix& theta);

/// Conjugation formula for a pure conjugator delta:
/// Theta(delta^-1) Phi(A_X) wedge2(Theta(delta)) in row convention. Agrees
/// with phi_gen modulo the image of d_3.
LaurentMatrix phi_conjugated(const VertexSet& x, const BraidWord& delta, int n);

struct MonodromyGen {
  VertexSet x;
  BraidWord delta;
};

/// Braid monodromy data. Strand p of the braid carries hyperplane labels[p]
/// (identity when empty); vertex sets are in strand numbering.
struct MonodromyInput {
  int n = 0;
  std::vector<MonodromyGen> generators;
  std::vector<int> labels;

  /// Point in hyperplane order -> point in strand order.
  std::vector<ExactScalar> to_strands(std::span<const ExactScalar> t) const;
};

/// alpha = delta^-1 A_Y delta with Y the image of X under the permutation of
/// delta^-1 (which acts first), so alpha twists the strands of X. Y = X for
/// pure delta.
BraidWord monodromy_braid(const MonodromyGen& g, int n);

/// Phi(alpha) for the generator, n x C(n,2).
LaurentMatrix phi_gen(const MonodromyGen& g, int n);

/// Checks the input and returns its lattice in hyperplane numbering: vertex
/// sets of size >= 3 are flats, size 2 double points, pairs in no vertex set
/// parallel. Throws ValidationError on overlapping vertex sets, bad labels or
/// a non-transitive parallel relation.
Lattice2 monodromy_lattice(const MonodromyInput& m);
/// Throws ValidationError unless monodromy_lattice(m) == lat.
void check_monodromy(const MonodromyInput& m, const Lattice2& lat);

/// Delta = (Phi_X' blocks; d_3): (b + C(n,3)) x C(n,2). Symbolic only for
/// n <= 8 (CapExceeded otherwise). The point is in hyperplane order.
LaurentMatrix delta_presentation(const MonodromyInput& m);
ExactMatrix delta_presentation_at(const MonodromyInput& m, std::span<const ExactScalar> t);

/// Alexander matrix rows (Theta(alpha_k) - id)(e_i), i in X_k', b x n.
LaurentMatrix partial2(const MonodromyInput& m);
ExactMatrix partial2_at(const MonodromyInput& m, std::span<const ExactScalar> t);

struct Membership {
  bool in_vk = false;  ///< the Delta criterion
  Index rank_delta = 0;
  Index rank_partial2 = 0;
  bool delta = false;     ///< rank Delta(t) <= C(n,2) - k
  bool partial2 = false;  ///< dim H^1(M; C_t) >= k
  bool agree = false;
  /// t != 1 and 1 <= k <= N = min(n, C(n,2) - b2): the two criteria are
  /// expected to agree. Outside it both are reported, nothing asserted.
  bool comparable = false;
  long range_n = 0;
};

/// Artin images and nabla(z_i) terms of every generator, computed once, so
/// repeated point evaluations only substitute.
class AlexanderPresentation {
 public:
  explicit AlexanderPresentation(const MonodromyInput& m);

  const MonodromyInput& input() const { return m_; }
  int n() const { return m_.n; }
  long b() const { return static_cast<long>(rows_.size()); }

  /// Points in hyperplane order.
  ExactMatrix phi_rows_at(std::span<const ExactScalar> t) const;
  ExactMatrix delta_at(std::span<const ExactScalar> t) const;
  ExactMatrix partial2_at(std::span<const ExactScalar> t) const;
  Membership membership(std::span<const ExactScalar> t, int k) const;

 private:
  struct Row {
    int i;  ///< strand
    std::vector<std::map<Exponent, long>> nabla;
  };
  std::vector<ExactScalar> strand_point(std::span<const ExactScalar> t) const;

  MonodromyInput m_;
  std::vector<Row> rows_;
};

/// Point in hyperplane order. Throws ValidationError on a zero coordinate or
/// the wrong length.
Membership in_charvar(const MonodromyInput& m, std::span<const ExactScalar> t, int k);

/// Distinct non-zero (q-k+1)-minors of the p x q matrix m, up to sign.
/// Empty (the zero ideal) when q-k+1 > p or k <= 0; {1} when k > q. Throws
/// CapExceeded when the minor size exceeds cap.
std::vector<LaurentPoly> fitting_generators(const LaurentMatrix& m, int k, int cap = 4);

/// Symbolic d_k of the resolution (same signs as resolution_d_at).
LaurentMatrix resolution_d(int k, int n);

/// Monodromy of a pencil (one generator, X = [n]) and of a generic
/// arrangement (all pairs double points), delta = identity.
MonodromyInput pencil_monodromy(int n);
MonodromyInput generic_monodromy(int n);

}  // namespace charvar

#endif  // CHARVAR_ALEXANDER_HPP
