#include "charvar/arrangement.hpp"

#include "charvar/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace charvar {

namespace {

using Vec3 = std::array<ExactScalar, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero3(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// Scales so the first non-zero coordinate is 1.
Vec3 projective_normal_form(Vec3 v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      const ExactScalar inv = c.inverse();
      for (auto& x : v) x *= inv;
      break;
    }
  }
  return v;
}

std::vector<VertexSet> group_pairs(int n, const std::vector<std::vector<std::optional<Vec3>>>& points) {
  std::vector<std::pair<Vec3, std::vector<int>>> groups;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& p = points[i][j];
      if (!p) continue;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == *p; });
      if (it == groups.end()) {
        groups.push_back({*p, {i, j}});
      } else {
        it->second.push_back(i);
        it->second.push_back(j);
      }
    }
  }
  std::vector<VertexSet> flats;
  for (auto& [p, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    flats.push_back(std::move(members));
  }
  return flats;
}

void check_flavor(const Arrangement& arr, Flavor want, const char* what) {
  if (arr.flavor != want) throw ValidationError(std::string(what) + ": wrong arrangement flavor");
}

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("H" + std::to_string(i));
  return labels;
}

int pair_index(int l, int i, int j) {
  // Position of (i, j), i < j, in the lexicographic list of pairs of [l].
  return i * l - i * (i + 1) / 2 + (j - i - 1);
}

Arrangement central(std::vector<Vec3> normals, std::vector<std::string> labels) {
  Arrangement arr;
  arr.flavor = Flavor::central3;
  for (auto& v : normals) arr.hyperplanes.push_back({v});
  arr.labels = std::move(labels);
  return arr;
}

Fixture from_arrangement(std::string name, Arrangement arr) {
  Fixture f;
  f.name = std::move(name);
  f.lattice = lattice_of(arr);
  f.labels = arr.labels;
  f.arrangement = std::move(arr);
  return f;
}

Fixture braid(int l) {
  if (l < 3) throw ValidationError("braid: need l >= 3");
  Fixture f;
  f.name = "braid(" + std::to_string(l) + ")";
  const int n = l * (l - 1) / 2;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) f.labels.push_back("H" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<VertexSet> flats;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int k = j + 1; k < l; ++k) flats.push_back({pair_index(l, i, j), pair_index(l, i, k), pair_index(l, j, k)});
  f.lattice = make_lattice(n, std::move(flats));
  if (l == 3) {
    f.arrangement = central({{{1, -1, 0}}, {{1, 0, -1}}, {{0, 1, -1}}}, f.labels);
  } else if (l == 4) {
    // Essential section x4 = 0 of the braid arrangement in C^4.
    f.arrangement = central({{{1, -1, 0}}, {{1, 0, -1}}, {{1, 0, 0}}, {{0, 1, -1}}, {{0, 1, 0}}, {{0, 0, 1}}}, f.labels);
  }
  return f;
}

// Hyperplanes x_i = zeta^k x_j ordered by (i, j) then k = 1..r, optionally
// preceded by the coordinate hyperplanes.
Fixture monomial(int r, int l, bool full) {
  if (r < 2 || l < 3) throw ValidationError("monomial: need r >= 2 and l >= 3");
  Fixture f;
  f.name = std::string(full ? "full_monomial(" : "monomial(") + std::to_string(r) + "," + std::to_string(l) + ")";
  const int offset = full ? l : 0;
  const int n = offset + r * l * (l - 1) / 2;
  if (full)
    for (int i = 0; i < l; ++i) f.labels.push_back("H" + std::to_string(i + 1));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int k = 1; k <= r; ++k)
        f.labels.push_back("H" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k));
  auto idx = [&](int i, int j, int k) { return offset + r * pair_index(l, i, j) + ((k - 1) % r + r) % r; };
  std::vector<VertexSet> flats;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      VertexSet x;
      if (full) x = {i, j};
      for (int k = 1; k <= r; ++k) x.push_back(idx(i, j, k));
      flats.push_back(std::move(x));
    }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int k = j + 1; k < l; ++k)
        for (int p = 1; p <= r; ++p)
          for (int q = 1; q <= r; ++q) flats.push_back({idx(i, j, p), idx(j, k, q), idx(i, k, p + q)});
  f.lattice = make_lattice(n, std::move(flats));
  if (l == 3) {
    std::vector<Vec3> normals;
    if (full)
      for (int i = 0; i < 3; ++i) {
        Vec3 v{0, 0, 0};
        v[i] = 1;
        normals.push_back(v);
      }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int k = 1; k <= r; ++k) {
          Vec3 v{0, 0, 0};
          v[i] = 1;
          v[j] = -ExactScalar::root_of_unity(static_cast<unsigned>(r), k);
          normals.push_back(v);
        }
    f.arrangement = central(std::move(normals), f.labels);
  }
  return f;
}

Fixture diamond() {
  return from_arrangement("diamond", central({{{1, 0, 0}},
                                              {{1, 1, 1}},
                                              {{1, 1, -1}},
                                              {{0, 1, 0}},
                                              {{1, -1, -1}},
                                              {{1, -1, 1}},
                                              {{0, 0, 1}}},
                                             numbered_labels(7)));
}

Fixture hessian() {
  std::vector<Vec3> normals{{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) normals.push_back({1, ExactScalar::root_of_unity(3, i), ExactScalar::root_of_unity(3, j)});
  return from_arrangement("hessian", central(std::move(normals), numbered_labels(12)));
}

std::vector<Fixture> falk_pair() {
  auto make = [](std::string name, std::vector<VertexSet> one_based) {
    Fixture f;
    f.name = std::move(name);
    for (auto& x : one_based)
      for (int& i : x) --i;
    f.lattice = make_lattice(7, std::move(one_based));
    f.labels = numbered_labels(7);
    return f;
  };
  return {make("falk_pair[1]", {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {4, 6, 7}}),
          make("falk_pair[2]", {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {1, 6, 7}})};
}

Fixture pencil(int n) {
  if (n < 2) throw ValidationError("pencil: need n >= 2");
  Arrangement arr;
  arr.flavor = Flavor::affine2;
  arr.hyperplanes.push_back({{1, 0, 0}});
  for (int k = 0; k + 1 < n; ++k) arr.hyperplanes.push_back({{k, -1, 0}});
  arr.labels = numbered_labels(n);
  return from_arrangement("pencil(" + std::to_string(n) + ")", std::move(arr));
}

Fixture generic(int n) {
  if (n < 1) throw ValidationError("generic: need n >= 1");
  // Tangent lines y = kx + k^2 of a parabola: no two parallel, no three concurrent.
  Arrangement arr;
  arr.flavor = Flavor::affine2;
  for (int k = 1; k <= n; ++k) arr.hyperplanes.push_back({{k, -1, -k * k}});
  arr.labels = numbered_labels(n);
  return from_arrangement("generic(" + std::to_string(n) + ")", std::move(arr));
}

}  // namespace

Lattice2 make_lattice(int n, std::vector<VertexSet> flats, std::vector<VertexSet> parallel) {
  if (n < 0) throw ValidationError("lattice: negative n");
  auto normalize = [n](std::vector<VertexSet>& sets, std::size_t min_size) {
    std::vector<VertexSet> kept;
    for (auto& x : sets) {
      std::sort(x.begin(), x.end());
      if (std::adjacent_find(x.begin(), x.end()) != x.end()) throw ValidationError("lattice: repeated index in flat");
      for (int i : x)
        if (i < 0 || i >= n) throw ValidationError("lattice: flat index out of range");
      if (x.size() >= min_size) kept.push_back(std::move(x));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    sets = std::move(kept);
  };
  normalize(flats, 3);
  normalize(parallel, 2);
  std::vector<std::vector<int>> owner(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  auto claim = [&](const std::vector<VertexSet>& sets) {
    for (const auto& x : sets)
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) {
          int& o = owner[x[a]][x[b]];
          if (o >= 0)
            throw ValidationError("lattice: pair {" + std::to_string(x[a] + 1) + "," + std::to_string(x[b] + 1) +
                                  "} lies in two flats");
          o = 1;
        }
  };
  claim(flats);
  claim(parallel);
  return Lattice2{n, std::move(flats), std::move(parallel)};
}

std::vector<std::vector<int>> pair_flat_table(const Lattice2& lat) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(lat.n), std::vector<int>(static_cast<std::size_t>(lat.n), -1));
  for (std::size_t f = 0; f < lat.flats.size(); ++f) {
    const auto& x = lat.flats[f];
    for (int a : x)
      for (int b : x)
        if (a != b) t[a][b] = static_cast<int>(f);
  }
  for (const auto& x : lat.parallel)
    for (int a : x)
      for (int b : x)
        if (a != b) t[a][b] = -2;
  return t;
}

std::vector<VertexSet> all_flats(const Lattice2& lat) {
  const auto table = pair_flat_table(lat);
  std::vector<VertexSet> out = lat.flats;
  for (int i = 0; i < lat.n; ++i)
    for (int j = i + 1; j < lat.n; ++j)
      if (table[i][j] == -1) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

long b2(const Lattice2& lat) {
  long b = 0;
  for (const auto& x : all_flats(lat)) b += static_cast<long>(x.size()) - 1;
  return b;
}

Lattice2 permute_lattice(const Lattice2& lat, const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  auto relabel = [&](const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (const auto& x : sets) {
      VertexSet y;
      for (int i : x) y.push_back(inv[static_cast<std::size_t>(i)]);
      out.push_back(std::move(y));
    }
    return out;
  };
  return make_lattice(lat.n, relabel(lat.flats), relabel(lat.parallel));
}

Lattice2 lattice_from_affine(const Arrangement& arr) {
  check_flavor(arr, Flavor::affine2, "lattice_from_affine");
  const int n = arr.size();
  for (const auto& h : arr.hyperplanes)
    if (h.coeffs[0].is_zero() && h.coeffs[1].is_zero()) throw ValidationError("affine line with a = b = 0");
  std::vector<std::vector<std::optional<Vec3>>> points(static_cast<std::size_t>(n),
                                                       std::vector<std::optional<Vec3>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& [a1, b1, c1] = arr.hyperplanes[i].coeffs;
      const auto& [a2, b2, c2] = arr.hyperplanes[j].coeffs;
      if (is_zero3(cross(arr.hyperplanes[i].coeffs, arr.hyperplanes[j].coeffs)))
        throw ValidationError("duplicate hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      const ExactScalar det = a1 * b2 - a2 * b1;
      if (det.is_zero()) continue;  // parallel
      const ExactScalar inv = det.inverse();
      points[i][j] = Vec3{(c1 * b2 - c2 * b1) * inv, (a1 * c2 - a2 * c1) * inv, ExactScalar(1)};
    }
  }
  std::vector<VertexSet> parallel;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (placed[i]) continue;
    VertexSet cls{i};
    for (int j = i + 1; j < n; ++j) {
      if (placed[j] || points[i][j]) continue;
      cls.push_back(j);
      placed[j] = true;
    }
    if (cls.size() >= 2) parallel.push_back(std::move(cls));
  }
  return make_lattice(n, group_pairs(n, points), std::move(parallel));
}

Lattice2 lattice_from_central3(const Arrangement& arr) {
  check_flavor(arr, Flavor::central3, "lattice_from_central3");
  const int n = arr.size();
  for (const auto& h : arr.hyperplanes)
    if (is_zero3(h.coeffs)) throw ValidationError("central plane with zero normal");
  std::vector<std::vector<std::optional<Vec3>>> points(static_cast<std::size_t>(n),
                                                       std::vector<std::optional<Vec3>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec3 line = cross(arr.hyperplanes[i].coeffs, arr.hyperplanes[j].coeffs);
      if (is_zero3(line))
        throw ValidationError("duplicate hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      points[i][j] = projective_normal_form(line);
    }
  }
  return make_lattice(n, group_pairs(n, points));
}

Lattice2 lattice_of(const Arrangement& arr) {
  return arr.flavor == Flavor::affine2 ? lattice_from_affine(arr) : lattice_from_central3(arr);
}

bool transverse_to_infinity(const Arrangement& arr) {
  if (arr.flavor != Flavor::affine2) return true;
  for (int i = 0; i < arr.size(); ++i)
    for (int j = i + 1; j < arr.size(); ++j) {
      const auto& p = arr.hyperplanes[i].coeffs;
      const auto& q = arr.hyperplanes[j].coeffs;
      if ((p[0] * q[1] - p[1] * q[0]).is_zero()) return false;
    }
  return true;
}

Deconed decone(const Arrangement& arr, std::optional<int> at) {
  check_flavor(arr, Flavor::central3, "decone");
  const int n = arr.size();
  const int h = at.value_or(n - 1);
  if (h < 0 || h >= n) throw ValidationError("decone: hyperplane index out of range");
  const Vec3& normal = arr.hyperplanes[h].coeffs;
  if (is_zero3(normal)) throw ValidationError("decone: zero normal");
  // Coordinates (u, v, w) with w = normal . x and u, v the two remaining
  // coordinate functions; the affine chart is w = 1.
  int r = 2;
  while (normal[r].is_zero()) --r;
  int p = r == 0 ? 1 : 0;
  int q = r == 2 ? 1 : 2;
  const ExactScalar inv = normal[r].inverse();
  Deconed out;
  out.at_infinity = h;
  out.affine.flavor = Flavor::affine2;
  for (int i = 0; i < n; ++i) {
    if (i == h) continue;
    const Vec3& a = arr.hyperplanes[i].coeffs;
    const ExactScalar s = a[r] * inv;
    Hyperplane line{{a[p] - s * normal[p], a[q] - s * normal[q], -s}};
    if (line.coeffs[0].is_zero() && line.coeffs[1].is_zero())
      throw ValidationError("decone: hyperplane " + std::to_string(i + 1) + " coincides with the one at infinity");
    out.affine.hyperplanes.push_back(line);
    out.affine.labels.push_back(i < static_cast<int>(arr.labels.size()) ? arr.labels[i] : "H" + std::to_string(i + 1));
    out.index_map.push_back(i);
  }
  return out;
}

Arrangement cone(const Arrangement& arr) {
  check_flavor(arr, Flavor::affine2, "cone");
  Arrangement out;
  out.flavor = Flavor::central3;
  for (const auto& h : arr.hyperplanes) out.hyperplanes.push_back({{h.coeffs[0], h.coeffs[1], -h.coeffs[2]}});
  out.hyperplanes.push_back({{0, 0, 1}});
  out.labels = arr.labels;
  out.labels.resize(arr.hyperplanes.size());
  for (std::size_t i = 0; i < out.labels.size(); ++i)
    if (out.labels[i].empty()) out.labels[i] = "H" + std::to_string(i + 1);
  out.labels.push_back("H_inf");
  return out;
}

std::vector<ExactScalar> lift_membership_point(const std::vector<ExactScalar>& t) {
  ExactScalar prod(1);
  for (const auto& x : t) {
    if (x.is_zero()) throw ValidationError("membership point must lie in the torus");
    prod *= x;
  }
  std::vector<ExactScalar> out = t;
  out.push_back(prod.inverse());
  return out;
}

std::vector<ExactScalar> decone_membership_point(const std::vector<ExactScalar>& t) {
  if (t.empty()) throw ValidationError("empty membership point");
  ExactScalar prod(1);
  for (const auto& x : t) {
    if (x.is_zero()) throw ValidationError("membership point must lie in the torus");
    prod *= x;
  }
  if (!prod.is_one()) throw ValidationError("coordinates of a central arrangement's point must multiply to 1");
  return {t.begin(), t.end() - 1};
}

std::vector<Fixture> gen_family(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "braid") return {braid(spec.l)};
  if (f == "monomial") return {monomial(spec.r, spec.l, false)};
  if (f == "full_monomial") return {monomial(spec.r, spec.l, true)};
  if (f == "diamond") return {diamond()};
  if (f == "hessian") return {hessian()};
  if (f == "falk_pair") return falk_pair();
  if (f == "pencil") return {pencil(spec.n)};
  if (f == "generic") return {generic(spec.n)};
  throw ValidationError("unknown family '" + f + "'");
}

std::string flat_to_string(const VertexSet& x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace charvar
