// Isometries of a lattice preserving a finite set of classes, found by
// backtracking over images of a base of classes with the same pairings.
#pragma once

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

#include "x56/lattice.hpp"
#include "x56/perm_group.hpp"

namespace x56 {

namespace detail {

/// Integer matrix with rows the base classes, its determinant D and D * inverse.
struct BaseInverse {
  std::vector<Vec> adj;  // D * B^{-1}, rows
  long d = 1;
};

inline BaseInverse base_inverse(const std::vector<Vec>& rows) {
  const std::size_t n = rows.size();
  ZMat B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = rows[i][j];
  Integer D = det(B);
  if (D == 0) throw InputError("classes do not span the lattice");
  QMat inv = inverse(to_rational(B), Rational(1));
  BaseInverse out;
  out.d = Integer(abs(D)).get_si();
  out.adj.assign(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = inv(i, j) * Rational(out.d);
      if (!is_integer(t)) throw InternalError("adjugate is not integral");
      out.adj[i][j] = t.get_num().get_si();
    }
  return out;
}

/// R = B^{-1} B' as integer rows, or false if it is not integral.
inline bool isometry_rows(const BaseInverse& bi, const std::vector<Vec>& images, std::vector<Vec>& R) {
  const std::size_t n = images.size();
  R.assign(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long a = bi.adj[i][k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) R[i][j] += a * images[k][j];
    }
  for (auto& row : R)
    for (long& x : row) {
      if (x % bi.d != 0) return false;
      x /= bi.d;
    }
  return true;
}

inline Vec row_times(const Vec& x, const std::vector<Vec>& R) {
  Vec y(R[0].size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * R[i][j];
  return y;
}

/// Base of linearly independent classes, chosen greedily and then ordered so
/// each next element has the most nonzero pairings with those already placed.
inline std::vector<std::size_t> choose_base(const Lattice& L, const std::vector<Vec>& classes) {
  const std::size_t n = L.rank();
  std::vector<std::size_t> base;
  for (std::size_t c = 0; c < classes.size() && base.size() < n; ++c) {
    QMat t(base.size() + 1, n);
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = Rational(classes[base[i]][j]);
    for (std::size_t j = 0; j < n; ++j) t(base.size(), j) = Rational(classes[c][j]);
    if (rank_of(t) == base.size() + 1) base.push_back(c);
  }
  if (base.size() != n) throw InputError("classes do not span the lattice");
  return base;
}

inline std::vector<std::size_t> order_base(std::vector<std::size_t> base, const std::vector<std::vector<long>>& table) {
  std::vector<std::size_t> out;
  auto total = [&](std::size_t a) {
    long c = 0;
    for (std::size_t b : base) c += (table[a][b] != 0);
    return c;
  };
  while (!base.empty()) {
    auto best = base.begin();
    long bs = -1, bt = -1;
    for (auto it = base.begin(); it != base.end(); ++it) {
      long s = 0;
      for (std::size_t o : out) s += (table[*it][o] != 0);
      long t = total(*it);
      if (s > bs || (s == bs && t > bt)) {
        best = it;
        bs = s;
        bt = t;
      }
    }
    out.push_back(*best);
    base.erase(best);
  }
  return out;
}

}  // namespace detail

/// Stabilizer data.  Elements are kept as permutations of `classes`; the
/// isometry of an element is recovered by isometry_of().
struct ClassStabilizer {
  std::vector<Vec> classes;
  std::vector<std::size_t> base;  // indices into classes, in search order
  std::vector<Perm> elements;     // sorted
  detail::BaseInverse base_inverse;
};


/// All isometries of L that permute `classes` and fix every vector in `fixed`.
/// `base` may name a basis of classes to map; otherwise one is chosen.  The
/// first level of the search is split over `threads` workers.
inline ClassStabilizer backtrack_stabilizer(const Lattice& L, const std::vector<Vec>& classes,
                                            const std::vector<Vec>& fixed = {},
                                            std::vector<std::size_t> base = {}, unsigned threads = 1) {
  if (!L.integral()) throw InputError("backtrack needs an integral lattice");
  const std::size_t N = classes.size(), n = L.rank();
  std::vector<std::vector<long>> table(N, std::vector<long>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) table[a][b] = table[b][a] = L.ipair(classes[a], classes[b]);
  std::vector<std::vector<long>> fixpair(N);
  for (std::size_t a = 0; a < N; ++a)
    for (const Vec& f : fixed) fixpair[a].push_back(L.ipair(classes[a], f));
  if (base.empty()) base = detail::choose_base(L, classes);
  if (base.size() != n) throw InputError("base must have one class per basis vector");
  base = detail::order_base(base, table);

  std::vector<Vec> base_rows;
  for (std::size_t b : base) base_rows.push_back(classes[b]);
  const detail::BaseInverse bi = detail::base_inverse(base_rows);
  std::map<Vec, int> index;
  for (std::size_t a = 0; a < N; ++a) index[classes[a]] = static_cast<int>(a);

  // Candidates for base position d: same pairings with fixed vectors and self-pairing.
  std::vector<std::vector<int>> cand(n);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < N; ++a)
      if (table[a][a] == table[base[d]][base[d]] && fixpair[a] == fixpair[base[d]]) cand[d].push_back(static_cast<int>(a));

  auto finish = [&](const std::vector<int>& img, std::vector<Perm>& out) {
    std::vector<Vec> images;
    for (int a : img) images.push_back(classes[a]);
    std::vector<Vec> R;
    if (!detail::isometry_rows(bi, images, R)) return;
    Perm p(N);
    for (std::size_t a = 0; a < N; ++a) {
      auto it = index.find(detail::row_times(classes[a], R));
      if (it == index.end()) return;
      p[a] = it->second;
    }
    if (!is_permutation(p)) return;
    for (const Vec& f : fixed)
      if (detail::row_times(f, R) != f) return;
    out.push_back(std::move(p));
  };

  auto search = [&](int first, std::vector<Perm>& out) {
    std::vector<int> img{first};
    std::vector<std::size_t> next{0};
    while (!img.empty()) {
      const std::size_t d = img.size();
      if (d == n) {
        finish(img, out);
        img.pop_back();
        continue;
      }
      if (next.size() < d + 1) next.push_back(0);
      bool placed = false;
      while (next[d] < cand[d].size()) {
        const int c = cand[d][next[d]++];
        bool ok = true;
        for (std::size_t j = 0; j < d && ok; ++j)
          ok = table[c][img[j]] == table[base[d]][base[j]] && c != img[j];
        if (ok) {
          img.push_back(c);
          placed = true;
          break;
        }
      }
      if (!placed) {
        next.resize(d);
        img.pop_back();
      }
    }
  };

  const auto& top = cand[0];
  threads = std::max(1u, threads);
  std::vector<std::vector<Perm>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < top.size(); k += threads) search(top[k], parts[t]);
    });
  for (auto& th : pool) th.join();

  ClassStabilizer out;
  out.classes = classes;
  out.base = base;
  out.base_inverse = bi;
  for (auto& part : parts)
    for (auto& p : part) out.elements.push_back(std::move(p));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// The isometry (rows = images of the lattice basis) of a class permutation.
inline ZMat isometry_of(const ClassStabilizer& st, const Perm& p) {
  std::vector<Vec> images;
  for (std::size_t b : st.base) images.push_back(st.classes[p[b]]);
  std::vector<Vec> R;
  if (!detail::isometry_rows(st.base_inverse, images, R)) throw InputError("permutation does not come from an isometry");
  const std::size_t n = R.size();
  ZMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = R[i][j];
  return out;
}

}  // namespace x56
