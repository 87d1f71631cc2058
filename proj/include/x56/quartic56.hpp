// The quartic model X56: cubics through six lines of the Fermat quartic,
// the quartic relation among them, the 56 lines and the projective
// automorphism group.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "x56/groebner.hpp"
#include "x56/polarization.hpp"

namespace x56 {

using CPoly = MPoly<CycNum>;

inline CPoly poly_from_terms(const std::vector<reference::TermData>& terms, MonomialOrder ord = {}) {
  std::vector<CPoly::Term> t;
  for (const auto& d : terms) t.push_back({Mono{d.exps[0], d.exps[1], d.exps[2], d.exps[3]}, CycNum::from_coord_string(d.coeff)});
  return CPoly::from_terms(4, t, ord);
}

inline std::vector<CPoly> reference_cubics() {
  return {poly_from_terms(reference::cubic_f1()), poly_from_terms(reference::cubic_f2()),
          poly_from_terms(reference::cubic_f3()), poly_from_terms(reference::cubic_f4())};
}

inline CPoly fermat_polynomial(MonomialOrder ord = MonomialOrder::lex()) {
  std::vector<CPoly::Term> t;
  for (int i = 0; i < 4; ++i) {
    Mono m{};
    m[i] = 4;
    t.push_back({m, CycNum(1)});
  }
  return CPoly::from_terms(4, t, ord);
}

/// y1^3 y2 + y1 y2^3 + y3^3 y4 + y3 y4^3 + (y1 y4 + y2 y3)(A (y1 y3 + y2 y4) + B (y1 y2 - y3 y4)).
inline CPoly psi_from_formula(MonomialOrder ord = {}) {
  const CycNum A = CycNum::from_coord_string(reference::coeff_A), B = A + CycNum(3);
  auto y = [&](int i) { return CPoly::variable(4, i, CycNum(1), ord); };
  CPoly y1 = y(0), y2 = y(1), y3 = y(2), y4 = y(3);
  CPoly base = y1 * y1 * y1 * y2 + y1 * y2 * y2 * y2 + y3 * y3 * y3 * y4 + y3 * y4 * y4 * y4;
  return base + (y1 * y4 + y2 * y3) * ((y1 * y3 + y2 * y4).scaled(A) + (y1 * y2 - y3 * y4).scaled(B));
}

inline CPoly psi_reference(MonomialOrder ord = {}) { return poly_from_terms(reference::psi_terms(), ord); }

/// Coefficients c_0..c_d of t -> f(p0 + t p1) for a form f of degree d.
template <class F>
std::vector<F> restrict_to_line(const MPoly<F>& f, const ProjLine<F>& l) {
  const auto& pts = l.points();
  const F zero = zero_like(pts[0][0]);
  const int d = f.total_degree();
  std::vector<F> out(static_cast<std::size_t>(std::max(d, 0)) + 1, zero);
  for (const auto& [m, c] : f.terms()) {
    std::vector<F> acc{c};
    for (int j = 0; j < 4; ++j)
      for (int e = 0; e < m[j]; ++e) {
        std::vector<F> nxt(acc.size() + 1, zero);
        for (std::size_t k = 0; k < acc.size(); ++k) {
          nxt[k] += acc[k] * pts[0][j];
          nxt[k + 1] += acc[k] * pts[1][j];
        }
        acc = std::move(nxt);
      }
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] += acc[k];
  }
  return out;
}

template <class F>
bool vanishes_on(const MPoly<F>& f, const ProjLine<F>& l) {
  for (const auto& c : restrict_to_line(f, l))
    if (!is_zero(c)) return false;
  return true;
}

struct LinSys {
  int degree = 3;
  std::vector<CLine> lines;
  std::vector<CPoly> basis;

  bool contains(const CPoly& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.total_degree() != degree) return false;
    return std::all_of(lines.begin(), lines.end(), [&](const CLine& l) { return vanishes_on(f, l); });
  }
};

/// Cubic forms vanishing on every given line; the basis comes from the reduced
/// echelon form of the 4-conditions-per-line system.
inline LinSys cubics_through_lines(const std::vector<CLine>& lines, int expected_dim = 4) {
  LinSys sys;
  sys.lines = lines;
  const auto monos = monomials_of_degree(4, 3);
  CMat M(4 * lines.size(), monos.size(), CycNum(0));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    CPoly m = CPoly::monomial(4, monos[c], CycNum(1));
    for (std::size_t l = 0; l < lines.size(); ++l) {
      auto r = restrict_to_line(m, lines[l]);
      for (std::size_t k = 0; k < 4; ++k) M(4 * l + k, c) = r[k];
    }
  }
  for (const auto& v : kernel(M, CycNum(1))) {
    std::vector<CPoly::Term> t;
    for (std::size_t c = 0; c < monos.size(); ++c) t.push_back({monos[c], v[c]});
    sys.basis.push_back(CPoly::from_terms(4, t));
  }
  if (expected_dim >= 0 && sys.basis.size() != static_cast<std::size_t>(expected_dim))
    throw InternalError("cubics through the lines: dimension " + std::to_string(sys.basis.size()));
  return sys;
}

/// Rows of C with target[i] = sum_j C(i,j) basis[j]; throws if a target is outside the span.
inline CMat change_of_basis(const std::vector<CPoly>& basis, const std::vector<CPoly>& target) {
  std::map<Mono, std::size_t> col;
  for (const auto* set : {&basis, &target})
    for (const auto& f : *set)
      for (const auto& [m, c] : f.terms()) col.emplace(m, col.size());
  CMat B(basis.size(), col.size(), CycNum(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [m, c] : basis[i].terms()) B(i, col[m]) = c;
  CMat C(target.size(), basis.size(), CycNum(0));
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::vector<CycNum> rhs(col.size(), CycNum(0)), x;
    for (const auto& [m, c] : target[i].terms()) rhs[col[m]] = c;
    if (!solve_left(B, rhs, x, CycNum(1))) throw InputError("polynomial is not in the span");
    C.set_row(i, x);
  }
  return C;
}

/// The six lines l1, l2, m1..m4 of the seed configuration.
inline std::vector<CLine> seed_six_lines() {
  std::vector<CLine> out;
  const auto& s = reference::seed_configuration();
  for (std::size_t k = 0; k < 6; ++k) out.push_back(line_from_tag(to_tag(s[k])));
  return out;
}

/// rho(g): remainder of g modulo the Fermat polynomial under lex x1 > x2 > x3 > x4.
inline CPoly fermat_remainder(const CPoly& g) {
  return reduce_remainder(g.with_order(MonomialOrder::lex()), {fermat_polynomial()});
}

struct DerivedPsi {
  CPoly psi;
  std::size_t rows = 0;  // dimension of the target space of degree-12 remainders
  std::size_t cols = 0;  // quartic monomials in y
  std::size_t kernel_dim = 0;
};

/// The quartic relation among four cubics modulo the Fermat polynomial,
/// normalized so that the coefficient of y1^3 y2 is one.
inline DerivedPsi derive_psi(const std::vector<CPoly>& f) {
  if (f.size() != 4) throw InputError("derive_psi needs four cubics");
  const auto lex = MonomialOrder::lex();
  std::vector<std::vector<CPoly>> pw(4);
  for (int i = 0; i < 4; ++i) {
    pw[i].push_back(CPoly::monomial(4, Mono{}, CycNum(1), lex));
    for (int k = 1; k <= 4; ++k) pw[i].push_back(pw[i].back() * f[i].with_order(lex));
  }
  DerivedPsi out;
  const auto ymonos = monomials_of_degree(4, 4);
  std::vector<Mono> rowmonos;
  for (const Mono& m : monomials_of_degree(4, 12, lex))
    if (m[0] <= 3) rowmonos.push_back(m);
  std::map<Mono, std::size_t> row;
  for (const Mono& m : rowmonos) row.emplace(m, row.size());
  out.rows = rowmonos.size();
  out.cols = ymonos.size();
  const CPoly F = fermat_polynomial();
  CMat M(out.rows, out.cols, CycNum(0));
  for (std::size_t c = 0; c < ymonos.size(); ++c) {
    const Mono& m = ymonos[c];
    CPoly g = pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]] * pw[3][m[3]];
    CPoly r = reduce_remainder(g, {F});
    for (const auto& [mm, cc] : r.terms()) {
      auto it = row.find(mm);
      if (it == row.end()) throw InternalError("remainder left the reduced monomial space");
      M(it->second, c) = cc;
    }
  }
  auto K = kernel(M, CycNum(1));
  out.kernel_dim = K.size();
  if (K.size() != 1) throw InternalError("kernel of the quartic relation has dimension " + std::to_string(K.size()));
  std::vector<CPoly::Term> t;
  for (std::size_t c = 0; c < ymonos.size(); ++c) t.push_back({ymonos[c], K[0][c]});
  CPoly psi = CPoly::from_terms(4, t);
  const CycNum lead = psi.coeff(Mono{3, 1, 0, 0}, CycNum(0));
  if (lead.is_zero()) throw InternalError("relation has no y1^3 y2 term");
  out.psi = psi.scaled(lead.inverse());
  return out;
}

/// Psi(f1, ..., f4) reduced modulo the Fermat polynomial.
inline CPoly rho_sigma(const CPoly& psi, const std::vector<CPoly>& f) {
  std::vector<CPoly> lexf;
  for (const auto& g : f) lexf.push_back(g.with_order(MonomialOrder::lex()));
  CPoly s = psi.substitute(lexf, CPoly::monomial(4, Mono{}, CycNum(1), MonomialOrder::lex()));
  return fermat_remainder(s);
}

/// Psi(A y): the polynomial composed with a linear substitution.
inline CPoly compose_linear(const CPoly& psi, const CMat& A) {
  std::vector<CPoly> lin;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<CPoly::Term> t;
    for (std::size_t j = 0; j < 4; ++j) {
      Mono m{};
      m[j] = 1;
      t.push_back({m, A(i, j)});
    }
    lin.push_back(CPoly::from_terms(4, t, psi.order()));
  }
  return psi.substitute(lin, CPoly::monomial(4, Mono{}, CycNum(1), psi.order()));
}

/// A quartic vanishes on a line iff it vanishes at five of its points.
inline bool line_on_surface(const CPoly& psi, const CLine& l) { return vanishes_on(psi, l); }

/// Every coordinate of the echelon equations has a power of 3 as denominator.
inline bool entries_in_z_zeta_third(const CLine& l) {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Integer d = l.equations()(i, j)[k].get_den();
        while (d % 3 == 0) d /= 3;
        if (d != 1) return false;
      }
  return true;
}

inline std::vector<CycNum> evaluate_all(const std::vector<CPoly>& f, const Point3<CycNum>& p) {
  std::vector<CycNum> out;
  for (const auto& g : f) out.push_back(g.evaluate(p));
  return out;
}

/// Linear forms of a line as polynomials; their echelon shape makes them a
/// Groebner basis under lex.
inline std::vector<CPoly> line_forms(const CLine& l, MonomialOrder ord = MonomialOrder::lex()) {
  std::vector<CPoly> out;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<CPoly::Term> t;
    for (std::size_t j = 0; j < 4; ++j) {
      Mono m{};
      m[j] = 1;
      t.push_back({m, l.equations()(i, j)});
    }
    out.push_back(CPoly::from_terms(4, t, ord));
  }
  return out;
}

/// The map x -> (f1(x) : ... : f4(x)) restricted to a line of the Fermat
/// quartic, as four polynomials to evaluate on the line.  When every f_i
/// vanishes along the line, f_i = a_i L1 + b_i L2 and the Fermat polynomial is
/// G1 L1 + G2 L2, so on the surface near the line L1 : L2 = -G2 : G1 and the
/// map extends as a_i (-G2) + b_i G1.
inline std::vector<CPoly> map_on_line(const std::vector<CPoly>& f, const CLine& l) {
  const bool all_vanish = std::all_of(f.begin(), f.end(), [&](const CPoly& g) { return vanishes_on(g, l); });
  if (!all_vanish) return f;
  const auto L = line_forms(l);
  auto dF = divide(fermat_polynomial(), L);
  if (!dF.remainder.is_zero()) throw InputError("line is not on the Fermat quartic");
  std::vector<CPoly> out;
  for (const auto& g : f) {
    auto d = divide(g.with_order(MonomialOrder::lex()), L);
    if (!d.remainder.is_zero()) throw InternalError("cubic vanishing on a line is not in its ideal");
    out.push_back(dF.quotients[0] * d.quotients[1] - dF.quotients[1] * d.quotients[0]);
  }
  return out;
}

/// Image of a line of the Fermat quartic under x -> (f1(x) : ... : f4(x)).
/// Points where every component vanishes are skipped; two further images must lie on the fitted line.
inline CLine image_line(const std::vector<CPoly>& f, const CLine& l) {
  const auto g = map_on_line(f, l);
  std::vector<Point3<CycNum>> imgs;
  for (long t = 0; t < 40 && imgs.size() < 4; ++t) {
    Point3<CycNum> p = t == 0 ? l.point_at(CycNum(0), CycNum(1)) : l.point_at(CycNum(1), CycNum(t - 1));
    auto q = evaluate_all(g, p);
    if (std::all_of(q.begin(), q.end(), [](const CycNum& c) { return c.is_zero(); })) continue;
    if (imgs.size() == 1) {
      CMat m(2, 4, CycNum(0));
      m.set_row(0, imgs[0]);
      m.set_row(1, q);
      if (rank_of(m) < 2) continue;
    }
    imgs.push_back(q);
  }
  if (imgs.size() < 4) throw InternalError("not enough image points on a line");
  CLine out = CLine::through(imgs[0], imgs[1]);
  for (std::size_t k = 2; k < imgs.size(); ++k)
    if (!out.contains(imgs[k])) throw InternalError("image of a line is not a line");
  return out;
}

struct X56Lines {
  Vec h56;
  std::vector<Vec> classes;        // F56, sorted
  std::vector<CLine> lines;        // lines[i] has class classes[i]
  std::vector<bool> from_image;    // true for the images of Fermat lines
  std::vector<int> discovery;      // indices of the transversal-derived lines, in order
  std::size_t shared = 0;
};

inline Vec h56_vector() {
  const auto& r = reference::h56();
  return Vec(r.begin(), r.end());
}

/// The 56 lines: images of the shared lines, then transversals found greedily
/// from the already known lines meeting each missing class.
inline X56Lines lines_on_x56(const FermatSurface& fs, const std::vector<CPoly>& f, const CPoly& psi) {
  X56Lines out;
  out.h56 = h56_vector();
  out.classes = enumerate_fixed_pairing(fs.S, out.h56, 1, -2);
  const std::size_t N = out.classes.size();
  out.lines.resize(N);
  out.from_image.assign(N, false);
  std::vector<bool> known(N, false);
  std::map<Vec, int> fermat_line;
  for (std::size_t a = 0; a < fs.classes.size(); ++a) fermat_line[fs.classes[a]] = static_cast<int>(a);
  for (std::size_t i = 0; i < N; ++i) {
    auto it = fermat_line.find(out.classes[i]);
    if (it == fermat_line.end()) continue;
    out.lines[i] = image_line(f, fs.lines[it->second]);
    out.from_image[i] = known[i] = true;
    ++out.shared;
  }
  std::vector<std::vector<long>> pr(N, std::vector<long>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) pr[a][b] = fs.S.ipair(out.classes[a], out.classes[b]);
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> todo;  // (-neighbours, index)
    for (std::size_t i = 0; i < N; ++i) {
      if (known[i]) continue;
      std::size_t nb = 0;
      for (std::size_t j = 0; j < N; ++j) nb += known[j] && pr[i][j] == 1;
      todo.push_back({N - nb, i});
    }
    if (todo.empty()) break;
    std::sort(todo.begin(), todo.end());
    bool progress = false;
    for (const auto& [neg, i] : todo) {
      std::vector<CLine> nb;
      for (std::size_t j = 0; j < N; ++j)
        if (known[j] && pr[i][j] == 1) nb.push_back(out.lines[j]);
      if (nb.size() < 4) continue;
      auto tr = common_intersecting_lines(nb);
      if (tr.status != TransversalStatus::unique || tr.lines.size() != 1) continue;
      out.lines[i] = tr.lines[0];
      known[i] = true;
      out.discovery.push_back(static_cast<int>(i));
      progress = true;
      break;
    }
    if (!progress) throw InternalError("no missing line has a unique common intersecting line");
  }
  for (std::size_t i = 0; i < N; ++i)
    if (!line_on_surface(psi, out.lines[i])) throw InternalError("a computed line is not on the quartic");
  return out;
}

/// Geometric intersection numbers agree with the lattice pairings for every pair.
inline bool intersections_match(const FermatSurface& fs, const X56Lines& xl) {
  for (std::size_t a = 0; a < xl.lines.size(); ++a)
    for (std::size_t b = a; b < xl.lines.size(); ++b)
      if (line_intersection_number(xl.lines[a], xl.lines[b]) != fs.S.ipair(xl.classes[a], xl.classes[b])) return false;
  return true;
}

inline CLine line_from_reference(const std::vector<std::array<const char*, 4>>& rows) {
  CMat m(2, 4, CycNum(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = CycNum::from_coord_string(rows[i][j]);
  return CLine::from_equations(m);
}

inline CMat matrix_from_reference(const std::array<std::array<const char*, 4>, 4>& rows) {
  CMat m(4, 4, CycNum(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = CycNum::from_coord_string(rows[i][j]);
  return m;
}

/// Scale so that the first nonzero entry (row-major) is one.
inline CMat normalize_projective(CMat A) {
  for (const CycNum& c : A.data())
    if (!c.is_zero()) {
      const CycNum inv = c.inverse();
      for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = A(i, j) * inv;
      return A;
    }
  throw InputError("zero matrix is not projective");
}

inline bool is_scalar_matrix(const CMat& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if ((i == j ? A(i, j) != A(0, 0) : !A(i, j).is_zero())) return false;
  return !A(0, 0).is_zero();
}

/// Projective order (smallest k with A^k scalar), up to `limit`; 0 if larger.
inline int projective_order(const CMat& A, int limit = 64) {
  CMat P = A;
  for (int k = 1; k <= limit; ++k) {
    if (is_scalar_matrix(P)) return k;
    P = P * A;
  }
  return 0;
}

inline Point3<CycNum> mat_vec(const CMat& A, const Point3<CycNum>& p) {
  Point3<CycNum> r(A.rows(), CycNum(0));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) r[i] += A(i, j) * p[j];
  return r;
}

/// Index of the image of every line under y -> A y.
inline Perm line_permutation(const X56Lines& xl, const CMat& A) {
  std::map<CLine, int> index;
  for (std::size_t i = 0; i < xl.lines.size(); ++i) index[xl.lines[i]] = static_cast<int>(i);
  Perm p(xl.lines.size());
  for (std::size_t i = 0; i < xl.lines.size(); ++i) {
    const auto& pts = xl.lines[i].points();
    CLine img = CLine::through(mat_vec(A, pts[0]), mat_vec(A, pts[1]));
    auto it = index.find(img);
    if (it == index.end()) throw InputError("matrix does not permute the lines");
    p[i] = it->second;
  }
  return p;
}

/// The projective matrix (normalized) sending line i to line p[i], if any.
inline std::optional<CMat> matrix_of_line_permutation(const X56Lines& xl, const Perm& p) {
  const std::size_t N = xl.lines.size();
  CMat M(4 * N, 16, CycNum(0));
  for (std::size_t a = 0; a < N; ++a) {
    const auto& pts = xl.lines[a].points();
    const auto& eq = xl.lines[p[a]].equations();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) M(4 * a + 2 * i + k, 4 * r + c) = eq(i, r) * pts[k][c];
  }
  auto K = kernel(M, CycNum(1));
  if (K.empty()) return std::nullopt;
  if (K.size() != 1) throw InternalError("line incidences do not determine the matrix");
  CMat A(4, 4, CycNum(0));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) A(r, c) = K[0][4 * r + c];
  if (rank_of(A) != 4) return std::nullopt;
  return normalize_projective(A);
}

struct X56Automorphisms {
  ClassStabilizer stabilizer;       // isometries fixing h56, as permutations of the 56 classes
  std::vector<Perm> group;          // those passing the period test, sorted
  std::vector<CMat> matrices;       // normalized projective matrix of each element of `group`
  bool others_have_no_matrix = false;
  std::array<Perm, 2> gamma_perms;
  std::array<bool, 2> gamma_found{};
  std::array<int, 2> gamma_order{};
  std::array<bool, 2> gamma_preserves_psi{};
  bool gammas_generate = false;
  std::vector<std::vector<int>> orbits;  // of the group on the 56 lines, by size
  std::array<int, 3> orbit_of_reference{-1, -1, -1};  // orbit index holding lambda8/16/32
  bool h56_from_orbit32 = false;
  bool h56_from_orbits_8_16 = false;
};

/// Psi(A y) = c Psi(y) for a nonzero scalar c.
inline bool preserves_up_to_scalar(const CPoly& psi, const CMat& A) {
  CPoly g = compose_linear(psi, A);
  if (g.is_zero() || g.size() != psi.size()) return false;
  const CycNum c = g.lc() * psi.lc().inverse();
  return g == psi.scaled(c);
}

inline X56Automorphisms aut_x56(const FermatSurface& fs, const X56Lines& xl, const CPoly& psi, unsigned threads = 1) {
  X56Automorphisms out;
  out.stabilizer = backtrack_stabilizer(fs.S, xl.classes, {xl.h56}, {}, threads);
  DiscForm qS = fermat_disc_form(fs);
  auto period = period_group(qS, transcendental_model());
  std::set<CMat> mats;
  out.others_have_no_matrix = true;
  for (const Perm& p : out.stabilizer.elements) {
    const bool hodge = hodge_test(fs.S, qS, period.gamma, isometry_of(out.stabilizer, p));
    if (hodge) {
      out.group.push_back(p);
      auto A = matrix_of_line_permutation(xl, p);
      if (!A) throw InternalError("period-preserving isometry without a projective matrix");
      out.matrices.push_back(*A);
    } else if (matrix_of_line_permutation(xl, p)) {
      out.others_have_no_matrix = false;
    }
  }
  const CMat g[2] = {matrix_from_reference(reference::gamma1_matrix()), matrix_from_reference(reference::gamma2_matrix())};
  for (int k = 0; k < 2; ++k) {
    const CMat n = normalize_projective(g[k]);
    out.gamma_found[k] = std::find(out.matrices.begin(), out.matrices.end(), n) != out.matrices.end();
    out.gamma_order[k] = projective_order(g[k]);
    out.gamma_preserves_psi[k] = preserves_up_to_scalar(psi, g[k]);
    out.gamma_perms[k] = line_permutation(xl, g[k]);
  }
  const auto closure = group_closure({out.gamma_perms[0], out.gamma_perms[1]}, xl.lines.size());
  out.gammas_generate = closure == out.group;
  out.orbits = point_orbits(out.group, xl.lines.size());
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const CLine refs[3] = {line_from_reference(reference::lambda8()), line_from_reference(reference::lambda16()),
                         line_from_reference(reference::lambda32())};
  for (int k = 0; k < 3; ++k)
    for (std::size_t o = 0; o < out.orbits.size(); ++o)
      for (int i : out.orbits[o])
        if (xl.lines[i] == refs[k]) out.orbit_of_reference[k] = static_cast<int>(o);
  if (out.orbits.size() == 3) {
    auto sum = [&](const std::vector<int>& orb, long w, Vec acc) {
      for (int i : orb)
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += w * xl.classes[i][j];
      return acc;
    };
    Vec eight(xl.h56.size());
    for (std::size_t j = 0; j < eight.size(); ++j) eight[j] = 8 * xl.h56[j];
    const Vec zero(xl.h56.size(), 0);
    out.h56_from_orbit32 = sum(out.orbits[2], 1, zero) == eight;
    out.h56_from_orbits_8_16 = sum(out.orbits[1], 1, sum(out.orbits[0], 2, zero)) == eight;
  }
  return out;
}

}  // namespace x56
