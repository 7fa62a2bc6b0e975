#include "charvar/components.hpp"

#include "charvar/errors.hpp"
#include "charvar/osres.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace charvar {

VertexSet Partition::support() const {
  VertexSet s;
  for (const auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<VertexSet> restricted_flats(const Lattice2& lat, const VertexSet& support) {
  std::vector<bool> in(static_cast<std::size_t>(lat.n), false);
  for (int i : support) in[static_cast<std::size_t>(i)] = true;
  std::vector<VertexSet> out;
  for (const auto& x : lat.flats) {
    VertexSet y;
    for (int i : x)
      if (in[static_cast<std::size_t>(i)]) y.push_back(i);
    if (y.size() >= 2) out.push_back(std::move(y));
  }
  const auto table = pair_flat_table(lat);
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (table[support[a]][support[b]] == -1) out.push_back({support[a], support[b]});
  return out;
}

namespace {

// Block id per hyperplane, -1 off the support.
std::vector<int> block_of(const Lattice2& lat, const Partition& pi) {
  std::vector<int> color(static_cast<std::size_t>(lat.n), -1);
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (pi.blocks[b].empty()) throw ValidationError("partition: empty block");
    for (int i : pi.blocks[b]) {
      if (i < 0 || i >= lat.n) throw ValidationError("partition: index out of range");
      if (color[static_cast<std::size_t>(i)] >= 0) throw ValidationError("partition: blocks overlap");
      color[static_cast<std::size_t>(i)] = static_cast<int>(b);
    }
  }
  return color;
}

bool monochrome(const VertexSet& y, const std::vector<int>& color) {
  for (int i : y)
    if (color[static_cast<std::size_t>(i)] != color[static_cast<std::size_t>(y.front())]) return false;
  return true;
}

RationalVector indicator(int n, const VertexSet& y) {
  RationalVector v = RationalVector::Zero(n);
  for (int i : y) v(i) = 1;
  return v;
}

Partition normalized(std::vector<VertexSet> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return Partition{std::move(blocks)};
}

bool component_less(const SubspaceComponent& a, const SubspaceComponent& b) {
  if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
  if (a.support != b.support) return a.support < b.support;
  if (a.kind != b.kind) return a.kind == ComponentKind::local;
  return a.partition.blocks < b.partition.blocks;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Restricted-growth enumeration of the neighborly partitions of the atoms of
// one support, pruning as soon as some flat is almost inside one block but
// has a member elsewhere.
class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::vector<int>> atom_members, std::vector<VertexSet> flats_by_atom_elements,
                  const std::vector<int>& atom_of)
      : atoms_(std::move(atom_members)), flats_(std::move(flats_by_atom_elements)) {
    const std::size_t a = atoms_.size();
    touching_.resize(a);
    for (std::size_t f = 0; f < flats_.size(); ++f)
      for (int i : flats_[f]) {
        auto& t = touching_[static_cast<std::size_t>(atom_of[static_cast<std::size_t>(i)])];
        if (t.empty() || t.back().first != static_cast<int>(f)) t.push_back({static_cast<int>(f), 0});
        ++t.back().second;
      }
    count_.assign(flats_.size(), std::vector<int>(a, 0));
    assigned_.assign(flats_.size(), 0);
    block_.assign(a, -1);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (!atoms_.empty()) assign(0, 0, visit);
  }

  const std::vector<int>& blocks() const { return block_; }

 private:
  template <typename Visit>
  void assign(std::size_t atom, int used, Visit& visit) {
    if (atom == atoms_.size()) {
      if (used >= 2) visit(block_, used);
      return;
    }
    for (int b = 0; b <= used && b < static_cast<int>(atoms_.size()); ++b) {
      block_[atom] = b;
      bool ok = true;
      for (const auto& [f, k] : touching_[atom]) {
        count_[f][static_cast<std::size_t>(b)] += k;
        assigned_[f] += k;
      }
      for (const auto& [f, k] : touching_[atom]) {
        const int size = static_cast<int>(flats_[f].size());
        const int c = count_[f][static_cast<std::size_t>(b)];
        // Only the block that just grew can newly reach |X| - 1; a block
        // that already had it is violated by any later member elsewhere.
        if (c >= size - 1 && assigned_[f] > c) ok = false;
        for (int bb = 0; ok && bb <= used; ++bb)
          if (bb != b && count_[f][static_cast<std::size_t>(bb)] >= size - 1 && assigned_[f] > count_[f][static_cast<std::size_t>(bb)])
            ok = false;
        if (!ok) break;
      }
      if (ok) assign(atom + 1, b == used ? used + 1 : used, visit);
      for (const auto& [f, k] : touching_[atom]) {
        count_[f][static_cast<std::size_t>(b)] -= k;
        assigned_[f] -= k;
      }
    }
    block_[atom] = -1;
  }

  std::vector<std::vector<int>> atoms_;
  std::vector<VertexSet> flats_;
  std::vector<std::vector<std::pair<int, int>>> touching_;  // (flat, members in this atom)
  std::vector<std::vector<int>> count_;
  std::vector<int> assigned_;
  std::vector<int> block_;
};

RationalVector random_point(const SubspaceComponent& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-9, 9);
  for (;;) {
    RationalVector c(s.dimension());
    for (Index i = 0; i < c.size(); ++i) c(i) = coef(rng);
    RationalVector v = s.basis * c;
    if (!is_zero_matrix(v)) return v;
  }
}

}  // namespace

bool is_neighborly(const Lattice2& lat, const Partition& pi) {
  const auto color = block_of(lat, pi);
  for (const auto& y : restricted_flats(lat, pi.support())) {
    std::vector<int> count(pi.blocks.size(), 0);
    for (int i : y) ++count[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])];
    for (int c : count)
      if (c >= static_cast<int>(y.size()) - 1 && c < static_cast<int>(y.size())) return false;
  }
  return true;
}

bool SubspaceComponent::essential() const {
  for (Index i = 0; i < basis.rows(); ++i)
    if (is_zero_matrix(basis.row(i))) return false;
  return basis.rows() > 0;
}

SubspaceComponent subspace_from_equations(const RationalMatrix& equations, ComponentKind kind) {
  SubspaceComponent s;
  s.kind = kind;
  const auto red = rref(equations);
  const Index r = static_cast<Index>(red.pivots.size());
  s.equations = RationalMatrix(r, equations.cols());
  for (Index i = 0; i < r; ++i) s.equations.row(i) = primitive_integer(red.reduced.row(i).transpose()).transpose();
  s.basis = hstack(nullspace(equations), equations.cols());
  return s;
}

SubspaceComponent s_pi(const Lattice2& lat, const Partition& pi) {
  const auto color = block_of(lat, pi);
  const VertexSet support = pi.support();
  std::vector<RationalVector> rows;
  rows.push_back(indicator(lat.n, support));
  for (const auto& y : restricted_flats(lat, support))
    if (!monochrome(y, color)) rows.push_back(indicator(lat.n, y));
  for (int j = 0; j < lat.n; ++j)
    if (color[static_cast<std::size_t>(j)] < 0) rows.push_back(indicator(lat.n, {j}));
  RationalMatrix e(static_cast<Index>(rows.size()), lat.n);
  for (std::size_t i = 0; i < rows.size(); ++i) e.row(static_cast<Index>(i)) = rows[i].transpose();
  SubspaceComponent s = subspace_from_equations(e, ComponentKind::nonlocal);
  s.support = support;
  s.partition = normalized(pi.blocks);
  return s;
}

FormReport pi_form_vanishes(const Partition& pi, const SubspaceComponent& s) {
  FormReport rep;
  const RationalMatrix& b = s.basis;
  for (Index u = 0; u < b.cols(); ++u)
    for (Index v = u + 1; v < b.cols(); ++v) {
      bool zero = true;
      for (const auto& block : pi.blocks) {
        for (std::size_t x = 0; x < block.size() && zero; ++x)
          for (std::size_t y = x + 1; y < block.size() && zero; ++y) {
            const int i = block[x], j = block[y];
            if (b(i, u) * b(j, v) != b(j, u) * b(i, v)) zero = false;
          }
        if (!zero) break;
      }
      if (!zero) rep.failing_pairs.emplace_back(u, v);
    }
  if (rep.failing_pairs.empty())
    rep.status = FormStatus::identically_zero;
  else
    rep.status = b.cols() == 2 ? FormStatus::nondegenerate : FormStatus::degenerate_locus_only;
  return rep;
}

std::vector<SubspaceComponent> local_components(const Lattice2& lat, int k) {
  std::vector<SubspaceComponent> out;
  for (const auto& x : lat.flats) {
    if (static_cast<int>(x.size()) < k + 2) continue;
    std::vector<RationalVector> rows{indicator(lat.n, x)};
    for (int j = 0; j < lat.n; ++j)
      if (!std::binary_search(x.begin(), x.end(), j)) rows.push_back(indicator(lat.n, {j}));
    SubspaceComponent s = subspace_from_equations(hstack(rows, lat.n).transpose(), ComponentKind::local);
    s.support = x;
    out.push_back(std::move(s));
  }
  return out;
}

bool contains(const SubspaceComponent& a, const SubspaceComponent& b) {
  if (b.dimension() == 0) return true;
  if (a.equations.rows() == 0) return true;
  return is_zero_matrix(RationalMatrix(a.equations * b.basis));
}

EnumerationResult enumerate_first_resonance(const Lattice2& lat, const EnumerationOptions& opt) {
  if (lat.n > opt.cap)
    throw CapExceeded("enumeration cap exceeded: n = " + std::to_string(lat.n) + " > " + std::to_string(opt.cap));
  if (!lat.parallel.empty())
    throw ValidationError("component enumeration needs an arrangement transverse to infinity (parallel lines present)");
  const int n = lat.n;
  EnumerationResult result;
  std::vector<SubspaceComponent> candidates = local_components(lat, 1);
  std::vector<std::pair<SubspaceComponent, FormReport>> flagged;

  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) >= 3) masks.push_back(m);
  auto members = [n](std::uint32_t m) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) s.push_back(i);
    return s;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return members(a) < members(b);
  });

  for (std::uint32_t mask : masks) {
    const VertexSet support = members(mask);
    const auto rflats = restricted_flats(lat, support);
    UnionFind uf(n);
    bool has_big = false;
    for (const auto& y : rflats) {
      if (y.size() == 2)
        uf.unite(y[0], y[1]);
      else
        has_big = true;
    }
    if (!has_big) continue;
    ++result.supports_scanned;
    std::vector<int> atom_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> atoms;
    for (int i : support) {
      const int root = uf.find(i);
      if (atom_of[static_cast<std::size_t>(root)] < 0) {
        atom_of[static_cast<std::size_t>(root)] = static_cast<int>(atoms.size());
        atoms.emplace_back();
      }
      atom_of[static_cast<std::size_t>(i)] = atom_of[static_cast<std::size_t>(root)];
      atoms[static_cast<std::size_t>(atom_of[static_cast<std::size_t>(i)])].push_back(i);
    }
    if (atoms.size() < 2) continue;
    std::vector<VertexSet> big;
    for (const auto& y : rflats)
      if (y.size() >= 3) big.push_back(y);
    PartitionSearch search(atoms, big, atom_of);
    search.run([&](const std::vector<int>& block, int used) {
      ++result.partitions_tested;
      std::vector<VertexSet> blocks(static_cast<std::size_t>(used));
      for (std::size_t a = 0; a < atoms.size(); ++a)
        for (int i : atoms[a]) blocks[static_cast<std::size_t>(block[a])].push_back(i);
      const Partition pi = normalized(std::move(blocks));
      SubspaceComponent s = s_pi(lat, pi);
      if (s.dimension() < 2) return;
      FormReport rep = pi_form_vanishes(pi, s);
      if (rep.status == FormStatus::identically_zero)
        candidates.push_back(std::move(s));
      else
        flagged.emplace_back(std::move(s), std::move(rep));
    });
  }

  // Deduplicate (locals come first, so they win ties), then keep maximal ones.
  std::stable_sort(candidates.begin(), candidates.end(), component_less);
  std::vector<SubspaceComponent> unique;
  for (auto& c : candidates) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const auto& u) { return u.equations == c.equations; });
    if (!dup) unique.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool strictly_inside = false;
    for (std::size_t j = 0; j < unique.size() && !strictly_inside; ++j)
      if (i != j && unique[j].dimension() > unique[i].dimension() && contains(unique[j], unique[i]))
        strictly_inside = true;
    if (!strictly_inside) result.components.push_back(unique[i]);
  }

  std::mt19937_64 rng(opt.seed);
  const ResonanceTester<Rational> tester(lat);
  for (auto& c : result.components) {
    c.verified = true;
    for (int s = 0; s < opt.samples; ++s)
      if (tester.h1_dim(random_point(c, rng)) < 1) c.verified = false;
  }

  for (auto& [s, rep] : flagged) {
    const bool covered =
        std::any_of(result.components.begin(), result.components.end(), [&](const auto& c) { return contains(c, s); });
    const bool dup = std::any_of(result.flagged.begin(), result.flagged.end(),
                                 [&](const auto& f) { return f.first.equations == s.equations; });
    if (!covered && !dup) result.flagged.emplace_back(std::move(s), std::move(rep));
  }
  return result;
}

TorusComponent torus_from_equations(int n, const IntegerMatrix& equations) {
  if (equations.cols() != n && equations.rows() > 0) throw ValidationError("torus equations have the wrong width");
  TorusComponent t;
  t.n = n;
  t.equations = equations.rows() == 0 ? IntegerMatrix(0, n) : saturate_rows(equations);
  return t;
}

TorusComponent exponentiate(const SubspaceComponent& s) {
  const int n = static_cast<int>(s.equations.cols() > 0 ? s.equations.cols() : s.basis.rows());
  return torus_from_equations(n, to_integer(s.equations));
}

TorusComponent full_torus(int m) { return TorusComponent{m, IntegerMatrix(0, m)}; }

std::vector<TorusComponent> free_group_components(int m, int k) {
  if (k >= 1 && k <= m - 1) return {full_torus(m)};
  return {};
}

std::vector<TorusComponent> product_components(const std::vector<TorusComponent>& first, int n1,
                                               const std::vector<TorusComponent>& second, int n2) {
  std::vector<TorusComponent> out;
  auto embed = [&](const TorusComponent& c, int offset, int other_offset, int other_n) {
    IntegerMatrix e = IntegerMatrix::Zero(c.equations.rows() + other_n, n1 + n2);
    if (c.equations.rows() > 0) e.block(0, offset, c.equations.rows(), c.n) = c.equations;
    for (int j = 0; j < other_n; ++j) e(c.equations.rows() + j, other_offset + j) = 1;
    out.push_back(torus_from_equations(n1 + n2, e));
  };
  for (const auto& c : first) embed(c, 0, n1, n2);
  for (const auto& c : second) embed(c, n1, 0, n1);
  return out;
}

bool same_torus(const TorusComponent& a, const TorusComponent& b) { return a.n == b.n && a.equations == b.equations; }

std::string monomial_string(const IntegerMatrix& row) {
  auto side = [&](bool positive) {
    std::string s;
    for (Index i = 0; i < row.size(); ++i) {
      const Integer e = row(i);
      if (e == 0 || (e > 0) != positive) continue;
      if (!s.empty()) s += '*';
      s += "t" + std::to_string(i + 1);
      const Integer m = positive ? e : Integer(-e);
      if (m != 1) s += "^" + m.str();
    }
    return s.empty() ? std::string("1") : s;
  };
  return side(true) + "=" + side(false);
}

std::vector<std::string> TorusComponent::monomial_equations() const {
  std::vector<std::string> out;
  for (Index i = 0; i < equations.rows(); ++i) out.push_back(monomial_string(equations.row(i)));
  return out;
}

}  // namespace charvar
