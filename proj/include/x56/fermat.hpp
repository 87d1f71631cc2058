// The Fermat quartic x1^4 + x2^4 + x3^4 + x4^4 = 0: its 48 lines, the
// Neron-Severi lattice they span, tau-points, projective automorphisms, the
// Galois action and the orbits of pairs of lines.
#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "x56/backtrack.hpp"
#include "x56/cyclotomic.hpp"
#include "x56/discriminant.hpp"
#include "x56/known_values.hpp"
#include "x56/lattice.hpp"
#include "x56/perm_group.hpp"
#include "x56/projective.hpp"

namespace x56 {

using CLine = ProjLine<CycNum>;
using CMat = Mat<CycNum>;

/// Line x1 + zeta^mu x_i = 0, x_j + zeta^nu x_k = 0 with {1,i,j,k} = {1,2,3,4}, j < k.
struct LineTag {
  int i = 2, mu = 1, nu = 1;
  friend bool operator==(const LineTag& a, const LineTag& b) { return a.i == b.i && a.mu == b.mu && a.nu == b.nu; }
  friend bool operator<(const LineTag& a, const LineTag& b) {
    return std::tie(a.i, a.mu, a.nu) < std::tie(b.i, b.mu, b.nu);
  }
  std::string to_string() const {
    return "[" + std::to_string(i) + ",[" + std::to_string(mu) + "," + std::to_string(nu) + "]]";
  }
};

inline bool valid_tag(const LineTag& t) {
  auto odd = [](int e) { return e == 1 || e == 3 || e == 5 || e == 7; };
  return t.i >= 2 && t.i <= 4 && odd(t.mu) && odd(t.nu);
}

/// Tags in lexicographic order; position equals tag_index.
inline std::vector<LineTag> all_tags() {
  std::vector<LineTag> out;
  for (int i = 2; i <= 4; ++i)
    for (int mu = 1; mu < 8; mu += 2)
      for (int nu = 1; nu < 8; nu += 2) out.push_back({i, mu, nu});
  return out;
}

inline std::size_t tag_index(const LineTag& t) {
  if (!valid_tag(t)) throw InputError("invalid line tag " + t.to_string());
  return static_cast<std::size_t>((t.i - 2) * 16 + (t.mu / 2) * 4 + t.nu / 2);
}

inline LineTag to_tag(const reference::TagData& t) { return {t.i, t.mu, t.nu}; }

/// Image of a tag under zeta -> zeta^k: the equations only involve zeta^mu and zeta^nu.
inline LineTag galois_tag(const LineTag& t, int k) {
  return {t.i, ((t.mu * k) % 8 + 8) % 8, ((t.nu * k) % 8 + 8) % 8};
}

inline CLine line_from_tag(const LineTag& t) {
  if (!valid_tag(t)) throw InputError("invalid line tag " + t.to_string());
  int rest[2], r = 0;
  for (int c = 2; c <= 4; ++c)
    if (c != t.i) rest[r++] = c;
  CMat eq(2, 4, CycNum(0));
  eq(0, 0) = 1;
  eq(0, t.i - 1) = CycNum::zeta(t.mu);
  eq(1, rest[0] - 1) = 1;
  eq(1, rest[1] - 1) = CycNum::zeta(t.nu);
  return CLine::from_equations(eq);
}

/// Image of a line under x -> A x, given A^{-1}: equations M become M A^{-1}.
inline CLine transform_line(const CLine& l, const CMat& a_inverse) {
  return CLine::from_equations(l.equations() * a_inverse);
}

inline CLine galois_line(const CLine& l, int k) {
  CMat eq = l.equations();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) eq(i, j) = eq(i, j).galois(k);
  return CLine::from_equations(eq);
}

inline CycNum fermat_value(const Point3<CycNum>& p) {
  CycNum s = 0;
  for (const auto& c : p) {
    CycNum c2 = c * c;
    s = s + c2 * c2;
  }
  return s;
}

struct TauPoint {
  Point3<CycNum> point;
  std::vector<int> lines;  // sorted tag indices
};

struct FermatSurface {
  std::vector<LineTag> tags;
  std::vector<CLine> lines;
  std::map<CLine, int> line_index;
  std::vector<std::vector<int>> intersection;  // geometric, 48 x 48
  std::vector<std::size_t> basis;              // tag indices of the lattice basis
  Lattice S;
  Vec h48;
  std::vector<Vec> classes;  // class of each line, by tag index

  int index_of(const CLine& l) const {
    auto it = line_index.find(l);
    if (it == line_index.end()) throw InputError("line is not on the Fermat quartic: " + l.to_string());
    return it->second;
  }
};

/// Lines, intersection numbers, the lattice spanned by the 20 basis lines and
/// the class of every line.  Throws if a line class fails to be integral.
inline FermatSurface build_fermat_surface() {
  FermatSurface fs;
  fs.tags = all_tags();
  for (std::size_t t = 0; t < fs.tags.size(); ++t) {
    fs.lines.push_back(line_from_tag(fs.tags[t]));
    const auto& pts = fs.lines.back().points();
    for (const auto& p : pts)
      if (!is_zero(fermat_value(p))) throw InternalError("tagged line is not on the surface");
    fs.line_index[fs.lines.back()] = static_cast<int>(t);
  }
  if (fs.line_index.size() != 48) throw InternalError("tagged lines are not distinct");
  const std::size_t N = fs.lines.size();
  fs.intersection.assign(N, std::vector<int>(N, 0));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b)
      fs.intersection[a][b] = fs.intersection[b][a] = line_intersection_number(fs.lines[a], fs.lines[b]);

  for (const auto& t : reference::basis_tags()) fs.basis.push_back(tag_index(to_tag(t)));
  const std::size_t n = fs.basis.size();
  QMat G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = fs.intersection[fs.basis[i]][fs.basis[j]];
  fs.S = Lattice(G);
  QMat Ginv = inverse(G, Rational(1));
  for (std::size_t a = 0; a < N; ++a) {
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = fs.intersection[a][fs.basis[i]];
    auto x = vec_mat(b, Ginv);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_integer(x[i])) throw InternalError("class of " + fs.tags[a].to_string() + " is not integral");
      v[i] = x[i].get_num().get_si();
    }
    fs.classes.push_back(v);
  }
  // The plane x1 + zeta x2 = 0 cuts out the four lines [2,[1,nu]].
  fs.h48.assign(n, 0);
  for (int nu = 1; nu < 8; nu += 2) {
    const Vec& c = fs.classes[tag_index({2, 1, nu})];
    for (std::size_t i = 0; i < n; ++i) fs.h48[i] += c[i];
  }
  return fs;
}

/// Points where at least three lines meet, with the lines through them.
inline std::vector<TauPoint> tau_points(const FermatSurface& fs) {
  std::map<Point3<CycNum>, std::set<int>> meet;
  const std::size_t N = fs.lines.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (fs.intersection[a][b] == 1) {
        auto& s = meet[meeting_point(fs.lines[a], fs.lines[b])];
        s.insert(static_cast<int>(a));
        s.insert(static_cast<int>(b));
      }
  std::vector<TauPoint> out;
  for (auto& [p, s] : meet)
    if (s.size() >= 3) out.push_back({p, std::vector<int>(s.begin(), s.end())});
  return out;
}

/// Permutation of the 48 lines induced by x -> A x.
inline Perm tag_permutation(const FermatSurface& fs, const CMat& A) {
  CMat Ainv = inverse(A, CycNum(1));
  Perm p(fs.lines.size());
  for (std::size_t a = 0; a < fs.lines.size(); ++a) p[a] = fs.index_of(transform_line(fs.lines[a], Ainv));
  return p;
}

/// Coordinate transpositions and the scaling of x1 by zeta^2.
inline std::vector<CMat> fermat_projective_generators() {
  std::vector<CMat> out;
  for (int k = 0; k < 3; ++k) {
    CMat m = identity_matrix<CycNum>(4, CycNum(1));
    m(k, k) = 0;
    m(k + 1, k + 1) = 0;
    m(k, k + 1) = 1;
    m(k + 1, k) = 1;
    out.push_back(m);
  }
  CMat d = identity_matrix<CycNum>(4, CycNum(1));
  d(0, 0) = CycNum::zeta(2);
  out.push_back(d);
  return out;
}

/// Action of zeta -> zeta^k on line indices, read off the conjugated equations.
/// Throws if it disagrees with galois_tag.
inline Perm galois_permutation(const FermatSurface& fs, int k) {
  Perm p(fs.lines.size());
  for (std::size_t a = 0; a < fs.lines.size(); ++a) {
    p[a] = fs.index_of(galois_line(fs.lines[a], k));
    if (static_cast<std::size_t>(p[a]) != tag_index(galois_tag(fs.tags[a], k)))
      throw InternalError("Galois action on tags disagrees with the conjugated equations");
  }
  return p;
}

/// Isometry of the lattice (rows = images of basis vectors) induced by a permutation of lines.
inline ZMat isometry_of_line_perm(const FermatSurface& fs, const Perm& p) {
  const std::size_t n = fs.basis.size();
  ZMat R(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R(i, j) = fs.classes[p[fs.basis[i]]][j];
  return R;
}

/// Discriminant form of the lattice with the fixed generator lifts.
inline DiscForm fermat_disc_form(const FermatSurface& fs) {
  const auto& cols = reference::disc_quotient_columns();
  const std::size_t n = fs.S.rank();
  ZMat coord(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) coord(r, c) = cols[c][r];
  std::vector<Vec> gens(reference::disc_generators().begin(), reference::disc_generators().end());
  return discriminant_form(fs.S, gens, coord, {8, 8});
}

inline Lattice transcendental_model() {
  const auto& t = reference::transcendental_gram();
  QMat m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = t[i][j];
  return Lattice(m);
}

struct FermatGroups {
  std::vector<Perm> generators;          // from projective generators
  std::vector<Perm> aut;                 // closure, sorted (G48)
  std::vector<std::pair<int, Perm>> galois;  // k = 3, 5, 7
  ClassStabilizer stabilizer;            // h48-stabilizer, on line indices
  PeriodGroupData period;
  std::vector<Perm> hodge;               // stabilizer elements passing the period test
  bool aut_passes_hodge = false;
  bool hodge_equals_aut = false;
  bool generated_by_aut_and_galois = false;
};

inline FermatGroups fermat_groups(const FermatSurface& fs, unsigned threads = 1) {
  FermatGroups g;
  for (const CMat& A : fermat_projective_generators()) g.generators.push_back(tag_permutation(fs, A));
  g.aut = group_closure(g.generators, fs.lines.size());
  for (int k : {3, 5, 7}) g.galois.push_back({k, galois_permutation(fs, k)});

  std::vector<std::size_t> base = fs.basis;  // the basis lines map to any list with the same pairings
  g.stabilizer = backtrack_stabilizer(fs.S, fs.classes, {fs.h48}, base, threads);

  DiscForm qS = fermat_disc_form(fs);
  g.period = period_group(qS, transcendental_model());
  std::set<Perm> aut(g.aut.begin(), g.aut.end());
  for (const Perm& p : g.stabilizer.elements)
    if (hodge_test(fs.S, qS, g.period.gamma, isometry_of(g.stabilizer, p))) g.hodge.push_back(p);
  g.hodge_equals_aut = g.hodge == g.aut;
  g.aut_passes_hodge = std::all_of(g.aut.begin(), g.aut.end(), [&](const Perm& p) {
    return hodge_test(fs.S, qS, g.period.gamma, isometry_of_line_perm(fs, p));
  });
  auto gens = g.generators;
  for (const auto& [k, p] : g.galois) gens.push_back(p);
  g.generated_by_aut_and_galois = group_closure(gens, fs.lines.size()) == g.stabilizer.elements;
  return g;
}

/// Orbits of unordered pairs of lines under a group given by generators,
/// labelled 1..8 by the pairs they contain from the reference table (0 if none).
struct PairOrbit {
  int label = 0;
  std::pair<int, int> rep;  // ordered representative
  std::size_t size = 0;
  bool intersecting = false;
  std::vector<std::vector<long>> A;  // 8 x 8 counting matrix
};

struct PairOrbitTable {
  std::vector<PairOrbit> orbits;            // labelled ones first, in label order
  std::vector<std::vector<int>> label;      // label[a][b] for a != b
  bool labels_consistent = false;           // each reference pair in a distinct orbit, all orbits labelled
};

inline PairOrbitTable pair_orbits(const FermatSurface& fs, const std::vector<Perm>& gens) {
  const int N = static_cast<int>(fs.lines.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.push_back({a, b});
  auto act = [](const std::pair<int, int>& pr, const Perm& g) {
    int x = g[pr.first], y = g[pr.second];
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  };
  auto orbs = orbits_of(pairs, gens, act);
  PairOrbitTable t;
  t.label.assign(N, std::vector<int>(N, 0));
  std::vector<int> orbit_label(orbs.size(), 0);
  std::vector<std::pair<int, int>> reps(orbs.size());
  for (std::size_t o = 0; o < orbs.size(); ++o) reps[o] = orbs[o].front();
  bool ok = true;
  const auto& ref = reference::pair_orbits();
  for (std::size_t r = 0; r < ref.size(); ++r) {
    int a = static_cast<int>(tag_index(to_tag(ref[r].a))), b = static_cast<int>(tag_index(to_tag(ref[r].b)));
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    for (std::size_t o = 0; o < orbs.size(); ++o)
      if (std::binary_search(orbs[o].begin(), orbs[o].end(), key)) {
        if (orbit_label[o] != 0) ok = false;
        orbit_label[o] = static_cast<int>(r) + 1;
        reps[o] = {a, b};
      }
  }
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    if (orbit_label[o] == 0) ok = false;
    for (auto [a, b] : orbs[o]) t.label[a][b] = t.label[b][a] = orbit_label[o];
  }
  t.labels_consistent = ok && orbs.size() == ref.size();
  std::vector<std::size_t> order(orbs.size());
  for (std::size_t o = 0; o < orbs.size(); ++o) order[o] = o;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int lx = orbit_label[x] ? orbit_label[x] : 1000, ly = orbit_label[y] ? orbit_label[y] : 1000;
    return lx < ly;
  });
  for (std::size_t o : order) {
    PairOrbit po;
    po.label = orbit_label[o];
    po.rep = reps[o];
    po.size = orbs[o].size();
    po.intersecting = fs.intersection[reps[o].first][reps[o].second] == 1;
    po.A.assign(8, std::vector<long>(8, 0));
    for (int c = 0; c < N; ++c) {
      if (c == po.rep.first || c == po.rep.second) continue;
      int j = t.label[po.rep.first][c], k = t.label[po.rep.second][c];
      if (j >= 1 && j <= 8 && k >= 1 && k <= 8) ++po.A[j - 1][k - 1];
    }
    t.orbits.push_back(std::move(po));
  }
  return t;
}

}  // namespace x56
