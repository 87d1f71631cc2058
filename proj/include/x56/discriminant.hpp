// Finite quadratic forms on L^dual / L and the action of isometries on them.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "x56/lattice.hpp"

namespace x56 {

/// Small matrix over Z/N, rows act on coordinate rows from the right.
using ModMat = std::vector<std::vector<long>>;

inline long mod_n(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline ModMat mod_identity(std::size_t k) {
  ModMat m(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

inline ModMat mod_mul(const ModMat& a, const ModMat& b, long n) {
  const std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size();
  ModMat m(r, std::vector<long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c; ++j) m[i][j] = mod_n(m[i][j] + a[i][k] * b[k][j], n);
  return m;
}

/// Inverse of a 2x2 matrix over Z/n; false if not invertible.
inline bool mod_inverse2(const ModMat& a, long n, ModMat& out) {
  long d = mod_n(a[0][0] * a[1][1] - a[0][1] * a[1][0], n);
  long inv = -1;
  for (long t = 1; t < n; ++t)
    if (mod_n(d * t, n) == 1) inv = t;
  if (inv < 0) return false;
  out = {{mod_n(a[1][1] * inv, n), mod_n(-a[0][1] * inv, n)}, {mod_n(-a[1][0] * inv, n), mod_n(a[0][0] * inv, n)}};
  return true;
}

inline std::string mod_mat_str(const ModMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
  }
  return s + "]";
}

/// Representative of q in [0, m).
inline Rational reduce_mod(const Rational& q, long m) {
  Rational mm(m);
  Rational k(floor_of(q / mm));
  Rational r = q - k * mm;
  r.canonicalize();
  return r;
}

/// disc(L) = L^dual / L with chosen generators.  Generators are stored in dual
/// coordinates (x G, integral); coord maps dual coordinates to generator
/// coefficients.
struct DiscForm {
  std::vector<long> orders;
  std::vector<Vec> gens;  // dual coordinates
  ZMat coord;             // n x k
  QMat values;            // diagonal mod 2, off-diagonal mod 1
  std::vector<std::vector<Rational>> lifts;  // primal coordinates of gens

  std::size_t size() const { return orders.size(); }
  long exponent() const {
    long e = 1;
    for (long o : orders) e = std::lcm(e, o);
    return e;
  }
  Integer group_order() const {
    Integer o = 1;
    for (long d : orders) o *= d;
    return o;
  }

  std::vector<long> coords(const Vec& dual) const {
    std::vector<long> c(size(), 0);
    for (std::size_t j = 0; j < size(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < dual.size(); ++i)
        if (dual[i] != 0) s += coord(i, j) * dual[i];
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(orders[j]));
      c[j] = r.get_si();
    }
    return c;
  }

  /// q on an element given by generator coefficients, in [0,2).
  Rational q(const std::vector<long>& c) const {
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      s += Rational(c[i] * c[i]) * values(i, i);
      for (std::size_t j = i + 1; j < size(); ++j) s += Rational(2 * c[i] * c[j]) * values(i, j);
    }
    return reduce_mod(s, 2);
  }

  /// b on generator coefficients, in [0,1).
  Rational b(const std::vector<long>& x, const std::vector<long>& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) s += Rational(x[i] * y[j]) * values(i, j);
    return reduce_mod(s, 1);
  }
};

namespace detail {

inline QMat disc_values(const Lattice& L, const std::vector<Vec>& gens) {
  Lattice D = L.dual();
  QMat v = gram_of_vectors(D, gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) v(i, j) = reduce_mod(v(i, j), i == j ? 2 : 1);
  return v;
}

inline void fill_lifts(const Lattice& L, DiscForm& d) {
  QMat Ginv = inverse(L.gram(), Rational(1));
  d.lifts.clear();
  for (const Vec& g : d.gens) {
    std::vector<Rational> gq(g.begin(), g.end());
    d.lifts.push_back(vec_mat(gq, Ginv));
  }
}

inline void require_even(const Lattice& L) {
  if (!L.even()) throw InputError("discriminant form needs an even integral lattice");
}

}  // namespace detail

/// Discriminant form with generators read off the Smith normal form of the Gram matrix.
inline DiscForm discriminant_form(const Lattice& L) {
  detail::require_even(L);
  const std::size_t n = L.rank();
  ZMat G = to_integer(L.gram());
  SmithForm s = smith_form(G);
  DiscForm d;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (abs(s.diagonal[i]) > 1) keep.push_back(i);
  d.coord = ZMat(n, keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const std::size_t i = keep[c];
    const Integer di = abs(s.diagonal[i]);
    if (!di.fits_slong_p()) throw InputError("discriminant group too large");
    d.orders.push_back(di.get_si());
    // primal lift U_i / d_i, dual coordinates U_i G / d_i
    Vec g(n);
    for (std::size_t j = 0; j < n; ++j) {
      Integer t = 0;
      for (std::size_t k = 0; k < n; ++k) t += s.U(i, k) * G(k, j);
      if (!mpz_divisible_p(t.get_mpz_t(), di.get_mpz_t())) throw InternalError("Smith form lift is not dual");
      t /= di;
      g[j] = t.get_si();
    }
    // sign of the diagonal entry is absorbed into the coordinate column
    const long sign = sgn(s.diagonal[i]);
    for (std::size_t r = 0; r < n; ++r) d.coord(r, c) = s.V(r, i) * sign;
    d.gens.push_back(g);
  }
  d.values = detail::disc_values(L, d.gens);
  detail::fill_lifts(L, d);
  return d;
}

/// Discriminant form with prescribed generators (dual coordinates) and a
/// prescribed quotient map dual -> coefficients.  Checks that the data is a
/// basis of disc(L).
inline DiscForm discriminant_form(const Lattice& L, const std::vector<Vec>& gens, const ZMat& coord,
                                  const std::vector<long>& orders) {
  detail::require_even(L);
  const std::size_t n = L.rank(), k = gens.size();
  if (coord.rows() != n || coord.cols() != k || orders.size() != k) throw InputError("discriminant data shape");
  DiscForm d;
  d.orders = orders;
  d.gens = gens;
  d.coord = coord;
  // The quotient map must kill L (rows of G) and send gens to the unit vectors.
  ZMat G = to_integer(L.gram());
  for (std::size_t i = 0; i < n; ++i) {
    Vec r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = G(i, j).get_si();
    for (long c : d.coords(r))
      if (c != 0) throw InputError("quotient map does not vanish on the lattice");
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto c = d.coords(gens[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (c[j] != (i == j ? 1 : 0)) throw InputError("generators are not a dual basis of the quotient map");
  }
  if (d.group_order() != abs(L.determinant())) throw InputError("generators do not span the discriminant group");
  d.values = detail::disc_values(L, gens);
  detail::fill_lifts(L, d);
  return d;
}

/// Matrix of the induced action of an isometry on disc(L) in the generator basis.
inline ModMat induced_disc_action(const Lattice& L, const DiscForm& D, const ZMat& R) {
  if (!is_isometry(L, R)) throw InputError("induced action needs an isometry");
  const std::size_t n = L.rank();
  ModMat out;
  for (const auto& y : D.lifts) {
    std::vector<Rational> yr(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(y[i]) != 0)
        for (std::size_t j = 0; j < n; ++j)
          if (R(i, j) != 0) yr[j] += y[i] * Rational(R(i, j));
    auto dual = vec_mat(yr, L.gram());
    Vec img(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(dual[j])) throw InternalError("image of a dual vector is not dual");
      img[j] = dual[j].get_num().get_si();
    }
    out.push_back(D.coords(img));
  }
  return out;
}

/// Automorphisms of a form on (Z/N)^2 (both orders equal), by exhaustion.
inline std::vector<ModMat> form_automorphisms(const DiscForm& D) {
  if (D.size() != 2 || D.orders[0] != D.orders[1]) throw InputError("form_automorphisms handles (Z/N)^2 only");
  const long N = D.orders[0];
  std::vector<ModMat> out;
  for (long a = 0; a < N; ++a)
    for (long b = 0; b < N; ++b)
      for (long c = 0; c < N; ++c)
        for (long e = 0; e < N; ++e) {
          ModMat m{{a, b}, {c, e}}, inv;
          if (!mod_inverse2(m, N, inv)) continue;
          if (D.q(m[0]) != D.values(0, 0) || D.q(m[1]) != D.values(1, 1)) continue;
          if (D.b(m[0], m[1]) != D.values(0, 1)) continue;
          out.push_back(m);
        }
  return out;
}

/// Isomorphisms from D to the form with value matrix -E.values (same group).
inline std::vector<ModMat> anti_isomorphisms(const DiscForm& D, const DiscForm& E) {
  if (D.size() != 2 || E.size() != 2 || D.orders != E.orders || D.orders[0] != D.orders[1])
    throw InputError("anti_isomorphisms handles (Z/N)^2 only");
  const long N = D.orders[0];
  auto neg = [](const Rational& x, long m) { return reduce_mod(-x, m); };
  std::vector<ModMat> out;
  for (long a = 0; a < N; ++a)
    for (long b = 0; b < N; ++b)
      for (long c = 0; c < N; ++c)
        for (long e = 0; e < N; ++e) {
          ModMat m{{a, b}, {c, e}}, inv;
          if (!mod_inverse2(m, N, inv)) continue;
          if (neg(E.q(m[0]), 2) != D.values(0, 0) || neg(E.q(m[1]), 2) != D.values(1, 1)) continue;
          if (neg(E.b(m[0], m[1]), 1) != D.values(0, 1)) continue;
          out.push_back(m);
        }
  return out;
}

/// Isometries of a positive definite rank-2 lattice, by enumerating images of the basis.
inline std::vector<ZMat> positive_rank2_isometries(const Lattice& T) {
  if (T.rank() != 2 || T.signature().first != 2) throw InputError("need a positive definite rank-2 lattice");
  const Rational n0 = T.norm({1, 0}), n1 = T.norm({0, 1});
  // |x_i|^2 <= norm * (G^{-1})_{ii}
  QMat Gi = inverse(T.gram(), Rational(1));
  auto bound = [&](const Rational& nn, std::size_t i) {
    Rational b = nn * Gi(i, i);
    long r = 0;
    while (Rational((r + 1) * (r + 1)) <= b) ++r;
    return r;
  };
  auto vectors_of_norm = [&](const Rational& nn) {
    std::vector<Vec> v;
    long r0 = bound(nn, 0), r1 = bound(nn, 1);
    for (long a = -r0; a <= r0; ++a)
      for (long b = -r1; b <= r1; ++b)
        if (T.norm({a, b}) == nn) v.push_back({a, b});
    return v;
  };
  std::vector<ZMat> out;
  for (const Vec& x : vectors_of_norm(n0))
    for (const Vec& y : vectors_of_norm(n1)) {
      ZMat R(2, 2);
      R(0, 0) = x[0];
      R(0, 1) = x[1];
      R(1, 0) = y[0];
      R(1, 1) = y[1];
      if (abs(det(R)) == 1 && is_isometry(T, R)) out.push_back(R);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Isometries of T that preserve the line spanned by omega = (1, i) in T (x) C,
/// for T with orthogonal basis of equal norms.
inline bool preserves_period_line(const ZMat& g) {
  // omega g = (g00 + i g10, g01 + i g11) must be a multiple of (1, i).
  return g(0, 1) == -g(1, 0) && g(1, 1) == g(0, 0);
}

/// Result of deriving the period subgroup of O(q_S) from a rank-2 transcendental model.
struct PeriodGroupData {
  std::size_t orthogonal_T = 0;
  std::size_t orthogonal_qT = 0;
  bool eta_T_injective = false;
  std::size_t period_T = 0;
  std::size_t isomorphism_count = 0;
  bool independent_of_phi = false;
  std::vector<ModMat> gamma;  // sorted
};

inline PeriodGroupData period_group(const DiscForm& qS, const Lattice& T) {
  PeriodGroupData out;
  DiscForm qT = discriminant_form(T);
  auto OT = positive_rank2_isometries(T);
  out.orthogonal_T = OT.size();
  out.orthogonal_qT = form_automorphisms(qT).size();
  std::vector<ModMat> etaT;
  std::vector<ModMat> etaGamma;
  for (const ZMat& g : OT) {
    ModMat e = induced_disc_action(T, qT, g);
    etaT.push_back(e);
    if (preserves_period_line(g)) {
      etaGamma.push_back(e);
      ++out.period_T;
    }
  }
  {
    auto s = etaT;
    std::sort(s.begin(), s.end());
    out.eta_T_injective = std::unique(s.begin(), s.end()) == s.end();
  }
  const long N = qS.orders[0];
  auto phis = anti_isomorphisms(qS, qT);
  out.isomorphism_count = phis.size();
  bool first = true;
  out.independent_of_phi = true;
  for (const ModMat& phi : phis) {
    ModMat phinv;
    mod_inverse2(phi, N, phinv);
    std::vector<ModMat> g;
    for (const ModMat& e : etaGamma) g.push_back(mod_mul(mod_mul(phi, e, N), phinv, N));
    std::sort(g.begin(), g.end());
    if (first) {
      out.gamma = g;
      first = false;
    } else if (g != out.gamma) {
      out.independent_of_phi = false;
    }
  }
  return out;
}

inline bool hodge_test(const Lattice& L, const DiscForm& D, const std::vector<ModMat>& gamma, const ZMat& R) {
  ModMat m = induced_disc_action(L, D, R);
  return std::find(gamma.begin(), gamma.end(), m) != gamma.end();
}

}  // namespace x56
