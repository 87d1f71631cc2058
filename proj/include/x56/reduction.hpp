// Reductions of X56 at primes of Z[zeta]: a finite set of possibly bad
// primes from tracked Groebner runs, direct checks over residue fields, and
// the audit of lines on the reduced surfaces.
#pragma once

#include <climits>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "x56/quartic56.hpp"

namespace x56 {

using FPoly = MPoly<FFElem>;
using FLine = ProjLine<FFElem>;

template <class F>
std::vector<MPoly<F>> jacobian_generators(const MPoly<F>& psi) {
  std::vector<MPoly<F>> out{psi};
  for (int v = 0; v < static_cast<int>(psi.nvars()); ++v) out.push_back(psi.derivative(v));
  return out;
}

/// 64-bit FNV-1a of a string, used to fingerprint Groebner bases.
inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class F>
std::string basis_fingerprint(const std::vector<MPoly<F>>& G) {
  std::string s = G.empty() ? "" : G[0].order().tag();
  for (const auto& g : G) s += "|" + g.to_string();
  return fnv1a_hex(s);
}

struct OrderingRun {
  std::string ordering;
  std::size_t basis_size = 0;
  bool pure_powers = false;
  std::vector<Integer> ctilde;
  std::string fingerprint;
  std::vector<CPoly> basis;
};

struct SmoothnessBound {
  std::vector<OrderingRun> runs;
  bool generic_smooth = false;
  std::vector<Integer> gcd_set;
  std::vector<long> primes;  // S
};

inline std::vector<MonomialOrder> default_orderings(bool all) {
  std::vector<MonomialOrder> out{MonomialOrder::degrevlex()};
  if (all) {
    out.push_back(MonomialOrder::lex());
    out.push_back(MonomialOrder::lex({3, 2, 1, 0}));
  }
  return out;
}

/// Tracked runs on the Jacobian ideal under each ordering, then S = P(gcds(C~_1, ..., C~_N)).
inline SmoothnessBound smoothness_bound(const CPoly& psi, const std::vector<MonomialOrder>& ords) {
  SmoothnessBound out;
  out.generic_smooth = true;
  std::vector<std::vector<Integer>> sets;
  for (const auto& ord : ords) {
    auto T = buchberger_tracked(jacobian_generators(psi.with_order(ord)));
    OrderingRun r;
    r.ordering = ord.tag();
    r.basis_size = T.basis.size();
    r.pure_powers = has_pure_powers(T.basis, 4);
    if (!is_groebner_basis(T.basis)) throw InternalError("tracked run did not produce a Groebner basis");
    r.ctilde = bad_integers(T.C);
    r.fingerprint = basis_fingerprint(T.basis);
    r.basis = std::move(T.basis);
    out.generic_smooth = out.generic_smooth && r.pure_powers;
    sets.push_back(r.ctilde);
    out.runs.push_back(std::move(r));
  }
  out.gcd_set = sets[0];
  for (std::size_t k = 1; k < sets.size(); ++k) out.gcd_set = gcds(out.gcd_set, sets[k]);
  out.primes = bad_primes_intersected(sets);
  return out;
}

inline FPoly reduce_at(const CPoly& f, const PrimeOfZZeta& P) { return reduce_poly(f, P); }

struct DirectSmoothness {
  bool smooth = false;
  std::vector<FPoly> basis;
  std::string fingerprint;
};

inline DirectSmoothness direct_smoothness(const CPoly& psi, const PrimeOfZZeta& P,
                                          MonomialOrder ord = MonomialOrder::degrevlex()) {
  auto T = buchberger_tracked(jacobian_generators(reduce_at(psi.with_order(ord), P)));
  DirectSmoothness d;
  d.smooth = has_pure_powers(T.basis, 4);
  d.fingerprint = basis_fingerprint(T.basis);
  d.basis = std::move(T.basis);
  return d;
}

inline std::string point_string(const Point3<FFElem>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + ")";
}

/// Rational singular points, by enumeration of P^3 over the residue field.
inline std::vector<Point3<FFElem>> singular_points(const CPoly& psi, const PrimeOfZZeta& P, std::uint64_t limit = 2000000) {
  const ResidueField& K = P.residue_field();
  if (!K.size().fits_ulong_p()) throw InputError("residue field too large to enumerate");
  const std::uint64_t q = K.size().get_ui();
  if ((q * q * q + q * q + q + 1) > limit) throw InputError("projective space too large to enumerate");
  auto gens = jacobian_generators(reduce_at(psi, P));
  std::vector<Point3<FFElem>> out;
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Point3<FFElem> p(4, K.zero());
      p[lead] = K.one();
      std::uint64_t r = idx;
      for (int j = lead + 1; j < 4; ++j) {
        p[j] = K.element_at(r % q);
        r /= q;
      }
      bool sing = true;
      for (const auto& g : gens)
        if (!g.evaluate(p).is_zero()) {
          sing = false;
          break;
        }
      if (sing) out.push_back(p);
    }
  }
  return out;
}

/// A line over Q(zeta) reduced at an unramified prime: each equation row is
/// scaled to be primitive at P, and a rank drop is repaired by subtracting a
/// lifted multiple and rescaling.
inline FLine reduce_line(const CLine& l, const PrimeOfZZeta& P) {
  std::vector<std::vector<CycNum>> rows{l.equations().row(0), l.equations().row(1)};
  const ResidueField& K = P.residue_field();
  auto primitive = [&](std::vector<CycNum>& r) {
    long v = LONG_MAX;
    for (const auto& c : r)
      if (!c.is_zero()) v = std::min(v, valuation(c, P));
    if (v == LONG_MAX) throw InternalError("zero equation row");
    CycNum s(Rational(1));
    const Rational p(static_cast<long>(P.p));
    for (long k = 0; k < std::abs(v); ++k) s = s.scaled(v > 0 ? Rational(1) / p : p);
    for (auto& c : r) c = c * s;
  };
  for (int iter = 0; iter < 16; ++iter) {
    primitive(rows[0]);
    primitive(rows[1]);
    Mat<FFElem> m(2, 4, K.zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = reduce_cyc(rows[i][j], P);
    if (rank_of(m) == 2) return FLine::from_equations(m);
    std::size_t j = 0;
    while (m(0, j).is_zero()) ++j;
    const CycNum c = lift(m(1, j) / m(0, j));
    for (std::size_t k = 0; k < 4; ++k) rows[1][k] = rows[1][k] - c * rows[0][k];
  }
  throw InternalError("line reduction keeps collapsing in rank");
}

/// Classes r' in the dual lattice with <r',h56> = 1, <r',r'> >= -2 and
/// <r',l> in {0,1} for every line class l.  Vectors are in dual coordinates,
/// so <r', x> is the dot product with x in lattice coordinates.
inline std::vector<Vec> dual_line_candidates(const FermatSurface& fs, const X56Lines& xl) {
  const Lattice D = fs.S.dual();
  const std::size_t n = fs.S.rank();
  Vec hd(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hd[i] += fs.S.gram()(i, j).get_num().get_si() * xl.h56[j];
  SliceEnumerator e(D, {hd});
  std::vector<Vec> out;
  for (const Vec& r : e.run({Rational(1)}, Rational(-2), Rational(1, 4))) {
    bool ok = true;
    for (const Vec& l : xl.classes) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += r[i] * l[i];
      if (s != 0 && s != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

/// Indices of the lines meeting r' once.
inline std::vector<int> neighbours_of_dual(const X56Lines& xl, const Vec& r) {
  std::vector<int> out;
  for (std::size_t i = 0; i < xl.classes.size(); ++i) {
    long s = 0;
    for (std::size_t k = 0; k < r.size(); ++k) s += r[k] * xl.classes[i][k];
    if (s == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

struct ReductionReport {
  std::string prime;
  long p = 0;
  std::string residue_field;
  int residue_degree = 0;
  bool smooth = false;
  std::string gb_certificate_hash;
  std::vector<std::string> singular_points;
  bool psi_is_hermitian = false;
  // lines
  bool lines_audited = false;
  bool reduced_lines_ok = false;  // distinct, on the surface, intersection numbers kept
  bool f_independent = false;
  std::size_t dual_candidates = 0;
  std::size_t without_transversal = 0;
  std::size_t with_unique_transversal = 0;
  long line_count = -1;  // when determined
  std::vector<std::string> extra_line_witnesses;
  bool gb_matches_reduction = false;  // the tracked basis reduces to the direct one
  bool gb_comparison_applies = false;
};

/// Hermitian quartic y1^3 y2 + y1 y2^3 + y3^3 y4 + y3 y4^3 over the residue field.
inline FPoly hermitian_quartic(const PrimeOfZZeta& P) {
  std::vector<CPoly::Term> t;
  for (Mono m : {Mono{3, 1, 0, 0}, Mono{1, 3, 0, 0}, Mono{0, 0, 3, 1}, Mono{0, 0, 1, 3}}) t.push_back({m, CycNum(1)});
  return reduce_at(CPoly::from_terms(4, t), P);
}

struct X56Data {
  const FermatSurface* fs = nullptr;
  const X56Lines* lines = nullptr;
  CPoly psi;
  std::vector<CPoly> f;
  std::vector<Vec> dual;  // F'56
  const SmoothnessBound* bound = nullptr;
};

inline ReductionReport smoothness_report(const CPoly& psi, const PrimeOfZZeta& P, bool find_points) {
  ReductionReport r;
  r.prime = P.name();
  r.p = P.p;
  r.residue_field = P.residue_field().describe();
  r.residue_degree = P.residue_degree;
  auto d = direct_smoothness(psi, P);
  r.smooth = d.smooth;
  r.gb_certificate_hash = d.fingerprint;
  if (!r.smooth && find_points)
    for (const auto& pt : singular_points(psi, P)) r.singular_points.push_back(point_string(pt));
  r.psi_is_hermitian = reduce_at(psi, P) == hermitian_quartic(P);
  return r;
}

/// Full audit at an unramified prime.
inline ReductionReport reduction_audit(const X56Data& X, const PrimeOfZZeta& P) {
  ReductionReport r = smoothness_report(X.psi, P, false);
  const FPoly psiP = reduce_at(X.psi, P);
  if (X.bound) {
    // the degrevlex tracked basis reduces to the direct basis when P avoids C~
    const auto& run = X.bound->runs.front();
    r.gb_comparison_applies = !divides_any(run.ctilde, P.p);
    if (r.gb_comparison_applies) {
      std::vector<FPoly> red;
      for (const auto& g : run.basis) red.push_back(reduce_at(g, P));
      auto d = direct_smoothness(X.psi, P, run.basis.front().order());
      r.gb_matches_reduction = red == d.basis;
    }
  }
  // f mod P
  {
    const auto monos = monomials_of_degree(4, 3);
    Mat<FFElem> m(4, monos.size(), P.residue_field().zero());
    for (std::size_t i = 0; i < 4; ++i) {
      FPoly g = reduce_at(X.f[i], P);
      for (std::size_t c = 0; c < monos.size(); ++c) m(i, c) = g.coeff(monos[c], P.residue_field().zero());
    }
    r.f_independent = rank_of(m) == 4;
  }
  const auto& xl = *X.lines;
  const std::size_t N = xl.lines.size();
  std::vector<FLine> red;
  for (const auto& l : xl.lines) red.push_back(reduce_line(l, P));
  bool ok = std::set<FLine>(red.begin(), red.end()).size() == N;
  for (const auto& l : red) ok = ok && vanishes_on(psiP, l);
  for (std::size_t a = 0; a < N && ok; ++a)
    for (std::size_t b = a + 1; b < N && ok; ++b)
      ok = line_intersection_number(red[a], red[b]) == X.fs->S.ipair(xl.classes[a], xl.classes[b]);
  r.reduced_lines_ok = ok;
  r.lines_audited = true;
  r.dual_candidates = X.dual.size();
  std::set<FLine> extra;
  bool determined = true;
  for (const Vec& rp : X.dual) {
    std::vector<FLine> nb;
    for (int i : neighbours_of_dual(xl, rp)) nb.push_back(red[i]);
    auto tr = common_intersecting_lines(nb);
    if (tr.status == TransversalStatus::none) {
      ++r.without_transversal;
    } else if (tr.status == TransversalStatus::unique && tr.lines.size() == 1 && vanishes_on(psiP, tr.lines[0])) {
      ++r.with_unique_transversal;
      extra.insert(tr.lines[0]);
      r.extra_line_witnesses.push_back(tr.lines[0].to_string());
    } else {
      determined = false;
      r.extra_line_witnesses.push_back(std::string("transversal status ") + to_string(tr.status));
    }
  }
  for (const auto& l : extra) determined = determined && !std::set<FLine>(red.begin(), red.end()).count(l);
  if (determined && r.smooth && ok) r.line_count = static_cast<long>(N + extra.size());
  return r;
}

/// The prime over 3 where A = -1-2zeta-2zeta^3 reduces to zero, and the other one.
inline std::pair<PrimeOfZZeta, PrimeOfZZeta> primes_over_three() {
  auto ps = split_prime(3);
  const CycNum A = CycNum::from_coord_string(reference::coeff_A);
  if (ps.size() != 2) throw InternalError("expected two primes over 3");
  if (reduce_cyc(A, ps[0]).is_zero()) return {ps[0], ps[1]};
  return {ps[1], ps[0]};
}

/// (1 : 0 : sqrt(-1) : 0) over the residue field.
inline Point3<FFElem> expected_singular_point(const PrimeOfZZeta& P) {
  const ResidueField& K = P.residue_field();
  auto i = K.sqrt(K.zero() - K.one());
  if (!i) throw InputError("-1 is not a square in " + K.describe());
  return normalize_point(Point3<FFElem>{K.one(), K.zero(), *i, K.zero()});
}

inline bool singular_at(const CPoly& psi, const PrimeOfZZeta& P, const Point3<FFElem>& pt) {
  for (const auto& g : jacobian_generators(reduce_at(psi, P)))
    if (!g.evaluate(pt).is_zero()) return false;
  return true;
}

struct ReductionSmoothness {
  SmoothnessBound bound;
  std::vector<ReductionReport> per_prime;  // every prime over every p in S
};

/// S from the tracked runs, then a direct check at each prime over p in S.
/// Singular points are listed when the residue field is small enough to enumerate.
inline ReductionSmoothness reduction_smoothness(const CPoly& psi, const std::vector<MonomialOrder>& ords) {
  ReductionSmoothness out;
  out.bound = smoothness_bound(psi, ords);
  if (!out.bound.generic_smooth) throw PreconditionError("generic fiber is not smooth");
  for (long p : out.bound.primes)
    for (const auto& P : split_prime(p)) {
      const bool small = P.residue_field().size() <= 50;
      out.per_prime.push_back(smoothness_report(psi, P, small));
    }
  return out;
}

inline const std::vector<long>& audit_primes() {
  static const std::vector<long> ps = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  return ps;
}

}  // namespace x56
