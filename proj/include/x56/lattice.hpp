#pragma once

// Lattices with exact Gram matrices and the two enumeration routines used
// throughout: vectors with prescribed pairings against a few fixed vectors
// and a prescribed norm, and the separating-vector search for hyperbolic
// lattices.  Enumeration reduces to a positive-definite ellipsoid and runs an
// exact Fincke-Pohst search on it, after exact LLL when the rank is large.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "x56/matrix.hpp"

namespace x56 {

/// Integer coordinates of a lattice vector with respect to the lattice basis.
using Vec = std::vector<long>;

inline std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vec operator*(long k, Vec a) {
  for (auto& x : a) x *= k;
  return a;
}

class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(QMat gram) : g_(std::move(gram)) {
    if (g_.rows() != g_.cols()) throw InputError("Gram matrix must be square");
    for (std::size_t i = 0; i < g_.rows(); ++i)
      for (std::size_t j = 0; j < g_.rows(); ++j) {
        g_(i, j).canonicalize();
        if (g_(i, j) != g_(j, i)) throw InputError("Gram matrix must be symmetric");
      }
    integral_ = is_integral(g_);
    if (integral_) {
      ig_.assign(rank() * rank(), 0);
      for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) {
          if (!g_(i, j).get_num().fits_slong_p()) throw InputError("Gram entry too large");
          ig_[i * rank() + j] = g_(i, j).get_num().get_si();
        }
    }
    if (sgn(x56::det(g_)) == 0) throw InputError("Gram matrix is degenerate");
  }

  std::size_t rank() const { return g_.rows(); }
  const QMat& gram() const { return g_; }
  bool integral() const { return integral_; }
  bool even() const {
    if (!integral_) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (ig_[i * rank() + i] % 2 != 0) return false;
    return true;
  }

  Rational determinant() const { return x56::det(g_); }

  /// (positive, negative) inertia, computed exactly by symmetric elimination.
  std::pair<int, int> signature() const {
    QMat m = g_;
    const std::size_t n = rank();
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t p = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i] && sgn(m(i, i)) != 0) {
          p = i;
          break;
        }
      if (p == n) {
        // All remaining diagonal entries vanish; pair up via an off-diagonal entry.
        std::size_t a = n, b = n;
        for (std::size_t i = 0; i < n && a == n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!done[i] && !done[j] && i != j && sgn(m(i, j)) != 0) {
              a = i;
              b = j;
              break;
            }
        if (a == n) break;
        // e_a <- e_a + e_b makes the diagonal entry 2 m(a,b) nonzero.
        for (std::size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
        for (std::size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
        p = a;
      }
      done[p] = true;
      (sgn(m(p, p)) > 0 ? pos : neg)++;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || sgn(m(i, p)) == 0) continue;
        Rational f = m(i, p) / m(p, p);
        for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(p, k);
        for (std::size_t k = 0; k < n; ++k) m(k, i) = m(i, k);
      }
    }
    return {pos, neg};
  }

  bool hyperbolic() const {
    auto s = signature();
    return s.first == 1 && s.second == static_cast<int>(rank()) - 1;
  }

  Rational pair(const Vec& x, const Vec& y) const {
    if (integral_) return Rational(ipair(x, y));
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (y[j] != 0) s += g_(i, j) * Rational(x[i] * y[j]);
    }
    return s;
  }
  Rational norm(const Vec& x) const { return pair(x, x); }

  long ipair(const Vec& x, const Vec& y) const {
    if (!integral_) throw InputError("integer pairing on a non-integral lattice");
    const std::size_t n = rank();
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      const long* row = &ig_[i * n];
      long t = 0;
      for (std::size_t j = 0; j < n; ++j) t += row[j] * y[j];
      s += x[i] * t;
    }
    return s;
  }

  /// Coordinates of the functional <., x> on the basis, i.e. x G.
  std::vector<Rational> dual_coords(const Vec& x) const {
    std::vector<Rational> r(rank(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; j < rank(); ++j) r[j] += Rational(x[i]) * g_(i, j);
    return r;
  }

  /// The dual lattice in the dual basis: Gram matrix G^{-1}.
  Lattice dual() const { return Lattice(inverse(g_, Rational(1))); }

 private:
  QMat g_;
  bool integral_ = false;
  std::vector<long> ig_;
};

inline QMat gram_of_vectors(const Lattice& L, const std::vector<Vec>& vs) {
  QMat m(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) m(i, j) = m(j, i) = L.pair(vs[i], vs[j]);
  return m;
}

namespace detail {

inline Integer round_rational(const Rational& q) {
  // nearest integer, ties toward +infinity
  return floor_of(q + Rational(1, 2));
}

/// Exact LLL on a positive-definite Gram matrix; returns the unimodular W
/// (rows are the reduced basis in old coordinates).
inline ZMat lll_gram(const QMat& gram0) {
  const std::size_t n = gram0.rows();
  ZMat W = identity_matrix<Integer>(n, Integer(1));
  if (n <= 1) return W;
  QMat g = gram0;
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> B(n);
  auto gso_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * B[k];
      mu[i][j] = s / B[j];
    }
    Rational s = g(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * B[k];
    B[i] = s;
    if (sgn(B[i]) <= 0) throw PreconditionError("LLL: Gram matrix is not positive definite");
  };
  gso_row(0);
  std::size_t kmax = 0;
  const Rational delta(3, 4);
  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) * 2 <= 1) return;
    Integer q = round_rational(mu[k][l]);
    Rational qq(q);
    // b_k <- b_k - q b_l
    for (std::size_t t = 0; t < n; ++t) W(k, t) -= q * W(l, t);
    const Rational gkk = g(k, k), gkl = g(k, l), gll = g(l, l);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == k) continue;
      g(k, t) -= qq * g(l, t);
      g(t, k) = g(k, t);
    }
    g(k, k) = gkk - 2 * qq * gkl + qq * qq * gll;
    mu[k][l] -= qq;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= qq * mu[l][i];
  };
  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gso_row(k);
    }
    reduce(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      // swap b_k, b_{k-1}
      W.swap_rows(k, k - 1);
      g.swap_rows(k, k - 1);
      g.swap_cols(k, k - 1);
      Rational m = mu[k][k - 1];
      Rational Bn = B[k] + m * m * B[k - 1];
      mu[k][k - 1] = m * B[k - 1] / Bn;
      B[k] = B[k - 1] * B[k] / Bn;
      B[k - 1] = Bn;
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return W;
}

inline QMat congruence(const ZMat& W, const QMat& g) {
  QMat Wq = to_rational(W);
  return Wq * g * Wq.transpose();
}

/// Integers t with (t - z)^2 <= r, as a closed range; false if none.
inline bool integer_window(const Rational& z, const Rational& r, Integer& lo, Integer& hi) {
  if (sgn(r) < 0) return false;
  const double zd = z.get_d(), rd = std::sqrt(std::max(0.0, r.get_d()));
  auto fits = [&](const Integer& t) {
    Rational w = Rational(t) - z;
    return w * w <= r;
  };
  Integer f = floor_of(z);
  Integer c = f + 1;
  Integer base;
  if (fits(f))
    base = f;
  else if (fits(c))
    base = c;
  else
    return false;
  hi = Integer(std::floor(zd + rd));
  if (hi < base) hi = base;
  while (fits(hi + 1)) ++hi;
  while (!fits(hi)) --hi;
  lo = Integer(std::ceil(zd - rd));
  if (lo > base) lo = base;
  while (fits(lo - 1)) --lo;
  while (!fits(lo)) ++lo;
  return true;
}

}  // namespace detail

/// Enumerates x in a lattice with <h_j, x> = a_j for fixed h_1..h_k and
/// lo <= <x,x> <= hi.  Requires the orthogonal complement of the h_j to be
/// negative definite (e.g. one h_j with <h_j,h_j> > 0 in a hyperbolic lattice).
class SliceEnumerator {
 public:
  SliceEnumerator(const Lattice& L, const std::vector<Vec>& hs, bool use_lll = true) : L_(&L) {
    const std::size_t n = L.rank(), k = hs.size();
    if (k == 0 || k >= n) throw InputError("slice needs between 1 and rank-1 constraints");
    // Functional columns, scaled to integers.
    ZMat F(n, k);
    scale_.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto col = L.dual_coords(hs[j]);
      std::vector<Rational> c(col.begin(), col.end());
      Integer den = lcm_of_denominators(c);
      scale_[j] = den;
      for (std::size_t i = 0; i < n; ++i) F(i, j) = Rational(c[i] * Rational(den)).get_num();
    }
    RowEchelon E = integer_row_echelon(F);
    if (E.rank != k) throw InputError("slice constraints are linearly dependent");
    H_ = E.H;
    const std::size_t m = n - k;
    Up_ = ZMat(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) Up_(i, j) = E.U(i, j);
    ZMat K0(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) K0(i, j) = E.U(k + i, j);
    QMat N0 = detail::congruence(K0, L.gram());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) N0(i, j) = -N0(i, j);
    ZMat W = (use_lll && m > 8) ? detail::lll_gram(N0) : identity_matrix<Integer>(m, Integer(1));
    K_ = W * K0;
    N_ = detail::congruence(W, N0);
    Ninv_ = inverse(N_, Rational(1));
    // q-decomposition: N(u) = sum q_ii (u_i + sum_{j>i} q_ij u_j)^2
    q_ = N_;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(q_(i, i)) <= 0) throw PreconditionError("complement of the slice is not negative definite");
      for (std::size_t j = i + 1; j < m; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) = q_(i, j) / q_(i, i);
      }
      for (std::size_t a = i + 1; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) q_(a, b) -= q_(a, i) * q_(i, b);
    }
    KG_ = to_rational(K_) * L.gram();
  }

  std::size_t free_rank() const { return K_.rows(); }

  /// All x with the given constraint values and lo <= <x,x> <= hi, sorted.
  std::vector<Vec> run(const std::vector<Rational>& values, const Rational& lo, const Rational& hi) const {
    const Lattice& L = *L_;
    const std::size_t n = L.rank(), k = values.size(), m = K_.rows();
    if (k != H_.rows()) throw InputError("wrong number of slice values");
    std::vector<Rational> a(k);
    for (std::size_t j = 0; j < k; ++j) {
      a[j] = values[j] * Rational(scale_[j]);
      if (!is_integer(a[j])) return {};
    }
    // y H = a
    std::vector<Rational> y;
    if (!solve_left(to_rational(H_), a, y, Rational(1))) return {};
    for (const auto& v : y)
      if (!is_integer(v)) return {};
    std::vector<Rational> xp(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) xp[j] += y[i] * Rational(Up_(i, j));
    // g = K G xp^T, c0 = xp G xp^T
    std::vector<Rational> g(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(xp[j]) != 0) g[i] += KG_(i, j) * xp[j];
    Rational c0 = 0;
    {
      auto xg = vec_mat(xp, L.gram());
      c0 = dot(xg, xp);
    }
    std::vector<Rational> t0 = vec_mat(g, Ninv_);
    Rational top = c0 + dot(g, t0);
    Rational Rhi = top - lo;
    Rational Rlo = top - hi;
    std::vector<Vec> out;
    if (sgn(Rhi) < 0) return out;
    std::vector<Integer> t(m);
    std::vector<Rational> u(m);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& T) {
      Rational c = 0;
      for (std::size_t j = i + 1; j < m; ++j)
        if (sgn(u[j]) != 0) c += q_(i, j) * u[j];
      Rational z = t0[i] - c;
      Integer tlo, thi;
      if (!detail::integer_window(z, T / q_(i, i), tlo, thi)) return;
      for (Integer ti = tlo; ti <= thi; ++ti) {
        t[i] = ti;
        u[i] = Rational(ti) - t0[i];
        Rational w = Rational(ti) - z;
        Rational Tn = T - q_(i, i) * w * w;
        if (i == 0) {
          if (Rhi - Tn >= Rlo) emit(xp, t, out);
        } else {
          rec(i - 1, Tn);
        }
      }
      u[i] = 0;
    };
    if (m == 0) {
      emit(xp, t, out);
    } else {
      rec(m - 1, Rhi);
    }
    std::vector<Vec> keep;
    keep.reserve(out.size());
    for (auto& x : out) {
      Rational nx = L.norm(x);
      if (nx < lo || nx > hi) throw InternalError("enumeration produced a vector outside the norm window");
      keep.push_back(std::move(x));
    }
    std::sort(keep.begin(), keep.end());
    return keep;
  }

 private:
  void emit(const std::vector<Rational>& xp, const std::vector<Integer>& t, std::vector<Vec>& out) const {
    const std::size_t n = L_->rank();
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = xp[j];
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != 0) s += Rational(t[i] * K_(i, j));
      if (!is_integer(s) || !s.get_num().fits_slong_p()) throw InternalError("non-integral lattice point");
      x[j] = s.get_num().get_si();
    }
    out.push_back(std::move(x));
  }

  const Lattice* L_;
  std::vector<Integer> scale_;
  ZMat H_, Up_, K_;
  QMat N_, Ninv_, q_, KG_;
};

/// Algorithm of the fixed-pairing type: all x with <h,x> = a and <x,x> = b.
inline std::vector<Vec> enumerate_fixed_pairing(const Lattice& L, const Vec& h, const Rational& a, const Rational& b) {
  if (sgn(L.norm(h)) <= 0) throw PreconditionError("enumerate_fixed_pairing needs <h,h> > 0");
  SliceEnumerator e(L, {h});
  return e.run({a}, b, b);
}

/// Step of the value group of x -> <h, x> on the lattice.
inline Rational pairing_step(const Lattice& L, const Vec& h) {
  auto c = L.dual_coords(h);
  Integer num = 0, den = 1;
  for (const auto& q : c) {
    num = gcd(num, q.get_num());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  return make_rational(num, den);
}

/// All x with <h,x> > 0, <h2,x> < 0 and <x,x> = d in a hyperbolic lattice.
inline std::vector<Vec> enumerate_separating(const Lattice& L, const Vec& h, const Vec& h2, const Rational& d) {
  if (sgn(d) >= 0) throw PreconditionError("enumerate_separating needs d < 0");
  const Rational hh = L.norm(h), gg = L.norm(h2), hg = L.pair(h, h2);
  if (sgn(hh) <= 0 || sgn(gg) <= 0 || sgn(hg) <= 0)
    throw PreconditionError("enumerate_separating needs <h,h>, <h2,h2>, <h,h2> > 0");
  const Rational det2 = hh * gg - hg * hg;
  if (sgn(det2) == 0) return {};  // proportional: the two sign conditions contradict
  if (sgn(det2) > 0) throw PreconditionError("span of h, h2 is not hyperbolic");
  const Rational bound = -d * -det2;
  SliceEnumerator e(L, {h, h2});
  const Rational s1 = pairing_step(L, h), s2 = pairing_step(L, h2);
  std::vector<Vec> out;
  for (Rational a = s1; gg * a * a <= bound; a += s1) {
    for (Rational b = -s2; hh * b * b <= bound; b -= s2) {
      if (gg * a * a - 2 * hg * a * b + hh * b * b > bound) continue;
      auto part = e.run({a, b}, d, d);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_nef_class(const Lattice& L, const Vec& ample, const Vec& v) {
  if (sgn(L.norm(v)) <= 0) throw PreconditionError("is_nef_class needs <v,v> > 0");
  if (sgn(L.pair(ample, v)) <= 0) return false;
  return enumerate_separating(L, ample, v, Rational(-2)).empty();
}

/// Reflection in a vector r of norm -2: x -> x + <x,r> r.
inline Vec reflect(const Lattice& L, const Vec& x, const Vec& r) {
  Rational c = L.pair(x, r);
  if (!is_integer(c)) throw InputError("reflection coefficient is not integral");
  return x + c.get_num().get_si() * r;
}

/// Matrix of the reflection s_r acting on row vectors from the right.
inline ZMat reflection_matrix(const Lattice& L, const Vec& r) {
  if (L.norm(r) != -2) throw InputError("reflection needs a (-2)-vector");
  const std::size_t n = L.rank();
  ZMat R(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Vec img = reflect(L, e, r);
    for (std::size_t j = 0; j < n; ++j) R(i, j) = img[j];
  }
  return R;
}

inline bool is_isometry(const Lattice& L, const ZMat& R) {
  if (R.rows() != L.rank() || R.cols() != L.rank()) return false;
  bool small = L.integral();
  for (std::size_t i = 0; small && i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j)
      if (abs(R(i, j)) > (1L << 20)) small = false;
  if (small) {
    // rows are images of the basis vectors; compare their pairings
    const std::size_t n = L.rank();
    std::vector<Vec> rows(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = R(i, j).get_si();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (L.gram()(i, j) != L.ipair(rows[i], rows[j])) return false;
    return true;
  }
  QMat Rq = to_rational(R);
  return Rq * L.gram() * Rq.transpose() == L.gram();
}

inline Vec apply_isometry(const Vec& x, const ZMat& R) {
  Vec y(R.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < R.cols(); ++j) y[j] += x[i] * R(i, j).get_si();
  }
  return y;
}

}  // namespace x56
