#pragma once

// Dense matrices over exact rings, row reduction over fields, and the
// integer routines (Bareiss determinant, Smith and Hermite forms) used by the
// lattice code.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "x56/rational.hpp"

namespace x56 {

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c, const T& fill = T()) : r_(r), c_(c), a_(r * c, fill) {}
  explicit Mat(const std::vector<std::vector<T>>& rows) : r_(rows.size()), c_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw InputError("ragged matrix rows");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != c_) throw InputError("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * c_);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r_; ++k) std::swap(a_[k * c_ + i], a_[k * c_ + j]);
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw InputError("matrix product shape mismatch");
    Mat m(a.r_, b.c_, a.r_ && a.c_ ? a(0, 0) - a(0, 0) : T());
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) { return a.a_ < b.a_; }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using QMat = Mat<Rational>;
using ZMat = Mat<Integer>;

template <class T>
Mat<T> identity_matrix(std::size_t n, const T& one) {
  Mat<T> m(n, n, one - one);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const Mat<T>& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix shape mismatch");
  std::vector<T> r(m.cols(), m.rows() && m.cols() ? m(0, 0) - m(0, 0) : T());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  T s = a.empty() ? T() : a[0] - a[0];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T inv = field_inverse(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class T>
std::size_t rank_of(Mat<T> m) {
  return rref(m).size();
}

/// Basis (as rows) of the right kernel {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Mat<T> m, const T& one) {
  auto piv = rref(m);
  const T zero = one - one;
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Solve x m = b for a row vector x; empty optional-like flag via bool.
template <class T>
bool solve_left(const Mat<T>& m, const std::vector<T>& b, std::vector<T>& x, const T& one) {
  // x m = b  <=>  m^T x^T = b^T
  Mat<T> aug(m.cols(), m.rows() + 1, one - one);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) aug(j, m.rows()) = b[j];
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.rows()) return false;
  x.assign(m.rows(), one - one);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.rows());
  return true;
}

template <class T>
Mat<T> inverse(const Mat<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("inverse of a non-square matrix");
  Mat<T> aug(n, 2 * n, one - one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InputError("matrix is singular");
  Mat<T> inv(n, n, one - one);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rational det(QMat m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return d;
}

/// Fraction-free (Bareiss) determinant.
inline Integer det(ZMat m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline QMat to_rational(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

inline bool is_integral(const QMat& m) {
  for (const auto& x : m.data())
    if (!is_integer(x)) return false;
  return true;
}

inline ZMat to_integer(const QMat& m) {
  ZMat z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw InputError("matrix entry is not an integer");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

/// Row-style Hermite reduction: unimodular U with U*A = [H; 0], H of full row rank.
struct RowEchelon {
  ZMat U;
  ZMat H;  // first rank rows of U*A
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RowEchelon integer_row_echelon(const ZMat& A) {
  const std::size_t n = A.rows(), k = A.cols();
  ZMat M = A;
  ZMat U = identity_matrix<Integer>(n, Integer(1));
  auto row_op = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c,
                    const Integer& d) {
    // (row i, row j) <- (a*row i + b*row j, c*row i + d*row j), ad - bc = +-1
    for (std::size_t t = 0; t < k; ++t) {
      Integer x = M(i, t), y = M(j, t);
      M(i, t) = a * x + b * y;
      M(j, t) = c * x + d * y;
    }
    for (std::size_t t = 0; t < n; ++t) {
      Integer x = U(i, t), y = U(j, t);
      U(i, t) = a * x + b * y;
      U(j, t) = c * x + d * y;
    }
  };
  std::size_t r = 0;
  RowEchelon out;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    for (std::size_t i = r + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), M(r, c).get_mpz_t(), M(i, c).get_mpz_t());
      Integer a = M(r, c) / g, b = M(i, c) / g;
      row_op(r, i, s, t, -b, a);
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) row_op(r, r, -1, 0, 0, -1);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), M(i, c).get_mpz_t(), M(r, c).get_mpz_t());
      if (q != 0) {
        for (std::size_t t = 0; t < k; ++t) M(i, t) -= q * M(r, t);
        for (std::size_t t = 0; t < n; ++t) U(i, t) -= q * U(r, t);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.U = U;
  out.H = ZMat(r, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) out.H(i, j) = M(i, j);
  return out;
}

/// Smith normal form: U*A*V = D with U, V unimodular and d_1 | d_2 | ...
struct SmithForm {
  ZMat U, V, D;
  std::vector<Integer> diagonal;
};

inline SmithForm smith_form(const ZMat& A) {
  const std::size_t n = A.rows(), m = A.cols();
  ZMat D = A;
  ZMat U = identity_matrix<Integer>(n, Integer(1));
  ZMat V = identity_matrix<Integer>(m, Integer(1));
  auto rows2 = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d) {
    for (std::size_t t = 0; t < m; ++t) {
      Integer x = D(i, t), y = D(j, t);
      D(i, t) = a * x + b * y;
      D(j, t) = c * x + d * y;
    }
    for (std::size_t t = 0; t < n; ++t) {
      Integer x = U(i, t), y = U(j, t);
      U(i, t) = a * x + b * y;
      U(j, t) = c * x + d * y;
    }
  };
  auto cols2 = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d) {
    for (std::size_t t = 0; t < n; ++t) {
      Integer x = D(t, i), y = D(t, j);
      D(t, i) = a * x + b * y;
      D(t, j) = c * x + d * y;
    }
    for (std::size_t t = 0; t < m; ++t) {
      Integer x = V(t, i), y = V(t, j);
      V(t, i) = a * x + b * y;
      V(t, j) = c * x + d * y;
    }
  };
  const std::size_t r = std::min(n, m);
  for (std::size_t k = 0; k < r; ++k) {
    // Move a nonzero entry of least absolute value to (k,k).
    for (;;) {
      std::size_t bi = n, bj = m;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < m; ++j)
          if (D(i, j) != 0 && (bi == n || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      if (bi != k) rows2(k, bi, 0, 1, 1, 0);
      if (bj != k) cols2(k, bj, 0, 1, 1, 0);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (D(i, k) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, k).get_mpz_t(), D(k, k).get_mpz_t());
        rows2(k, i, 1, 0, -q, 1);
        if (D(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < m; ++j) {
        if (D(k, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(k, j).get_mpz_t(), D(k, k).get_mpz_t());
        cols2(k, j, 1, 0, -q, 1);
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < m; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(k, k).get_mpz_t())) {
            rows2(k, i, 1, 1, 0, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(k, k) < 0) rows2(k, k, -1, 0, 0, -1);
  }
  SmithForm s{U, V, D, {}};
  for (std::size_t k = 0; k < r; ++k) s.diagonal.push_back(D(k, k));
  return s;
}

template <class T>
std::string vec_to_string(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? ";" : "") << vec_to_string(m.row(i));
  return os << "]";
}

}  // namespace x56
