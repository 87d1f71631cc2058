// Lines in P^3 over an exact field: canonical equations, Pluecker vectors, incidence.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "x56/finite_field.hpp"
#include "x56/matrix.hpp"

namespace x56 {

template <class F>
using Point3 = std::vector<F>;

/// Scale so that the first nonzero coordinate is one.
template <class F>
Point3<F> normalize_point(Point3<F> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!is_zero(p[i])) {
      F inv = field_inverse(p[i]);
      for (auto& c : p) c = c * inv;
      return p;
    }
  throw InputError("zero vector is not a projective point");
}

template <class F>
class ProjLine {
 public:
  ProjLine() = default;

  /// Line cut out by two independent linear forms (rows of a 2x4 matrix).
  static ProjLine from_equations(const Mat<F>& eq) {
    if (eq.rows() != 2 || eq.cols() != 4) throw InputError("a line needs a 2x4 equation matrix");
    ProjLine l;
    l.eq_ = eq;
    auto piv = rref(l.eq_);
    if (piv.size() != 2) throw InputError("line equations are dependent");
    l.finish();
    return l;
  }

  /// Line through two distinct points.
  static ProjLine through(const Point3<F>& p, const Point3<F>& q) {
    Mat<F> m(2, 4, zero_like(p[0]));
    m.set_row(0, p);
    m.set_row(1, q);
    auto k = kernel(m, one_like(p[0]));
    if (k.size() != 2) throw InputError("points do not span a line");
    Mat<F> eq(2, 4, zero_like(p[0]));
    eq.set_row(0, k[0]);
    eq.set_row(1, k[1]);
    return from_equations(eq);
  }

  /// Line with the given Pluecker vector (p01,p02,p03,p12,p13,p23).
  static ProjLine from_pluecker(const std::array<F, 6>& x) {
    const F z = zero_like(x[0]);
    Mat<F> s(4, 4, z);
    const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int k = 0; k < 6; ++k) {
      s(idx[k][0], idx[k][1]) = x[k];
      s(idx[k][1], idx[k][0]) = z - x[k];
    }
    auto piv = rref(s);
    if (piv.size() != 2) throw InputError("Pluecker vector does not describe a line");
    return through(s.row(0), s.row(1));
  }

  const Mat<F>& equations() const { return eq_; }
  const std::array<Point3<F>, 2>& points() const { return pts_; }
  const std::array<F, 6>& pluecker() const { return pl_; }

  bool contains(const Point3<F>& p) const {
    for (std::size_t i = 0; i < 2; ++i) {
      F s = zero_like(p[0]);
      for (std::size_t j = 0; j < 4; ++j) s = s + eq_(i, j) * p[j];
      if (!is_zero(s)) return false;
    }
    return true;
  }

  /// Point s*p0 + t*p1.
  Point3<F> point_at(const F& s, const F& t) const {
    Point3<F> r(4);
    for (std::size_t j = 0; j < 4; ++j) r[j] = s * pts_[0][j] + t * pts_[1][j];
    return r;
  }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.eq_ == b.eq_; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.eq_ < b.eq_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 2; ++i) s += (i ? ";" : "") + vec_to_string(eq_.row(i));
    return s + "]";
  }

 private:
  void finish() {
    const F one = one_like(eq_(0, 0));
    auto k = kernel(eq_, one);
    pts_ = {k[0], k[1]};
    const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int i = 0; i < 6; ++i)
      pl_[i] = pts_[0][idx[i][0]] * pts_[1][idx[i][1]] - pts_[0][idx[i][1]] * pts_[1][idx[i][0]];
  }

  Mat<F> eq_;
  std::array<Point3<F>, 2> pts_;
  std::array<F, 6> pl_;
};

/// The bilinear form whose vanishing means two lines meet.
template <class F>
F pluecker_pairing(const std::array<F, 6>& a, const std::array<F, 6>& b) {
  return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
}

template <class F>
bool lines_meet(const ProjLine<F>& a, const ProjLine<F>& b) {
  return is_zero(pluecker_pairing(a.pluecker(), b.pluecker()));
}

/// -2 for equal lines, 1 for distinct coplanar lines, 0 for skew lines.
template <class F>
int line_intersection_number(const ProjLine<F>& a, const ProjLine<F>& b) {
  if (a == b) return -2;
  Mat<F> m(4, 4, zero_like(a.equations()(0, 0)));
  for (std::size_t i = 0; i < 2; ++i) {
    m.set_row(i, a.equations().row(i));
    m.set_row(i + 2, b.equations().row(i));
  }
  return rank_of(m) == 3 ? 1 : 0;
}

/// Common point of two meeting distinct lines.
template <class F>
Point3<F> meeting_point(const ProjLine<F>& a, const ProjLine<F>& b) {
  const F one = one_like(a.equations()(0, 0));
  Mat<F> m(4, 4, zero_like(one));
  for (std::size_t i = 0; i < 2; ++i) {
    m.set_row(i, a.equations().row(i));
    m.set_row(i + 2, b.equations().row(i));
  }
  auto k = kernel(m, one);
  if (k.size() != 1) throw InputError("lines do not meet in a single point");
  return normalize_point(k[0]);
}

enum class TransversalStatus { none, unique, two, family };

inline const char* to_string(TransversalStatus s) {
  switch (s) {
    case TransversalStatus::none: return "none";
    case TransversalStatus::unique: return "unique";
    case TransversalStatus::two: return "two";
    case TransversalStatus::family: return "family";
  }
  return "?";
}

/// Lines meeting every input line.  `count` is the number over an algebraic
/// closure (when finite); `lines` holds those defined over the base field.
template <class F>
struct Transversals {
  TransversalStatus status = TransversalStatus::none;
  std::size_t count = 0;
  std::vector<ProjLine<F>> lines;
};

template <class F>
Transversals<F> common_intersecting_lines(const std::vector<ProjLine<F>>& ms) {
  if (ms.empty()) throw InputError("need at least one line");
  const F zero = zero_like(ms[0].pluecker()[0]);
  const F one = one_like(ms[0].equations()(0, 0));
  // X is a transversal iff pairing(X, m) = 0 for all m and X lies on the quadric.
  Mat<F> A(ms.size(), 6, zero);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& p = ms[i].pluecker();
    // pairing(X, p) = X0 p5 - X1 p4 + X2 p3 + X3 p2 - X4 p1 + X5 p0
    A(i, 0) = p[5];
    A(i, 1) = zero - p[4];
    A(i, 2) = p[3];
    A(i, 3) = p[2];
    A(i, 4) = zero - p[1];
    A(i, 5) = p[0];
  }
  auto W = kernel(A, one);
  auto quad = [](const std::vector<F>& x) -> F { return x[0] * x[5] - x[1] * x[4] + x[2] * x[3]; };
  auto bil = [](const std::vector<F>& x, const std::vector<F>& y) -> F {
    return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
  };
  auto to_arr = [](const std::vector<F>& x) {
    std::array<F, 6> a;
    for (int i = 0; i < 6; ++i) a[i] = x[i];
    return a;
  };
  Transversals<F> out;
  if (W.empty()) return out;
  if (W.size() == 1) {
    if (is_zero(quad(W[0]))) {
      out.status = TransversalStatus::unique;
      out.count = 1;
      out.lines.push_back(ProjLine<F>::from_pluecker(to_arr(W[0])));
    }
    return out;
  }
  if (W.size() >= 3) {
    out.status = TransversalStatus::family;
    return out;
  }
  // Q(s w0 + t w1) = a s^2 + b s t + c t^2
  const F a = quad(W[0]), b = bil(W[0], W[1]), c = quad(W[1]);
  if (is_zero(a) && is_zero(b) && is_zero(c)) {
    out.status = TransversalStatus::family;
    return out;
  }
  auto combo = [&](const F& s, const F& t) {
    std::vector<F> x(6, zero);
    for (int i = 0; i < 6; ++i) x[i] = s * W[0][i] + t * W[1][i];
    return x;
  };
  const F disc = b * b - (one + one + one + one) * a * c;
  std::vector<std::pair<F, F>> roots;  // (s, t)
  if (is_zero(disc)) {
    out.status = TransversalStatus::unique;
    out.count = 1;
    if (is_zero(a)) {
      roots.push_back({one, zero});
    } else if (!is_zero(one + one)) {
      roots.push_back({zero - b, (one + one) * a});
    } else if (auto r = field_sqrt(c * field_inverse(a))) {
      // characteristic 2: a s^2 + c t^2 = (sqrt(a) s + sqrt(c) t)^2
      roots.push_back({*r, one});
    }
  } else {
    out.status = TransversalStatus::two;
    out.count = 2;
    if (is_zero(a)) {
      // t (b s + c t) = 0
      roots.push_back({one, zero});
      roots.push_back({zero - c, b});
    } else if (is_zero(one + one)) {
      // characteristic 2 with b != 0: roots need an Artin-Schreier extension; count only
    } else if (auto r = field_sqrt(disc)) {
      roots.push_back({zero - b + *r, (one + one) * a});
      roots.push_back({zero - b - *r, (one + one) * a});
    }
  }
  for (auto& [s, t] : roots) {
    auto x = combo(s, t);
    if (!is_zero(quad(x))) throw InternalError("transversal root is not on the Pluecker quadric");
    out.lines.push_back(ProjLine<F>::from_pluecker(to_arr(x)));
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

}  // namespace x56
