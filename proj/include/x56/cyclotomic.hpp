#pragma once

// Exact arithmetic in Q(zeta), zeta a primitive 8th root of unity, in the
// power basis 1, zeta, zeta^2, zeta^3 with zeta^4 = -1.

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "x56/rational.hpp"

namespace x56 {

class CycNum {
 public:
  CycNum() = default;
  CycNum(long n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& q) : c_{q, 0, 0, 0} { c_[0].canonicalize(); }
  CycNum(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (auto& q : c_) q.canonicalize();
  }

  /// zeta^k for any integer k.
  static CycNum zeta(long k = 1) {
    long r = ((k % 8) + 8) % 8;
    CycNum z;
    if (r < 4)
      z.c_[r] = 1;
    else
      z.c_[r - 4] = -1;
    return z;
  }

  const Rational& operator[](int i) const { return c_[i]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  /// All coordinates are integers, i.e. the element lies in Z[zeta].
  bool is_integral() const {
    for (const auto& q : c_)
      if (q.get_den() != 1) return false;
    return true;
  }

  CycNum& operator+=(const CycNum& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycNum& operator-=(const CycNum& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycNum& operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
  }
  CycNum& operator/=(const CycNum& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator-(CycNum a) {
    for (auto& q : a.c_) q = -q;
    return a;
  }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    CycNum r;
    mpq_class t;
    for (int i = 0; i < 4; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        t = a.c_[i] * b.c_[j];
        int k = i + j;
        if (k < 4)
          r.c_[k] += t;
        else
          r.c_[k - 4] -= t;
      }
    }
    return r;
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) {
    if (b.is_rational()) {
      if (sgn(b.c_[0]) == 0) throw InputError("division by zero in Q(zeta)");
      return a.scaled(1 / b.c_[0]);
    }
    return a * b.inverse();
  }
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  /// Lexicographic on coordinates; only for canonical ordering of containers.
  friend bool operator<(const CycNum& a, const CycNum& b) {
    for (int i = 0; i < 4; ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  CycNum scaled(const Rational& q) const {
    CycNum r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
  }

  /// Galois automorphism zeta -> zeta^k, k odd.
  CycNum galois(long k) const {
    if (k % 2 == 0) throw InputError("Galois exponent must be odd");
    CycNum r(c_[0]);
    for (int i = 1; i < 4; ++i)
      if (sgn(c_[i]) != 0) r += zeta(k * i).scaled(c_[i]);
    return r;
  }
  CycNum complex_conjugate() const { return galois(7); }

  /// Field norm down to Q.
  Rational norm() const {
    CycNum n = *this * galois(3) * galois(5) * galois(7);
    return n.c_[0];
  }

  CycNum inverse() const {
    if (is_zero()) throw InputError("division by zero in Q(zeta)");
    if (is_rational()) return CycNum(1 / c_[0]);
    CycNum rest = galois(3) * galois(5) * galois(7);
    Rational n = (*this * rest).c_[0];
    return rest.scaled(1 / n);
  }

  /// Least positive d with d*x in Z[zeta].
  Integer denominator() const {
    Integer l = 1;
    for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
  }

  /// Power-basis string "c0,c1,c2,c3".
  std::string to_coord_string() const {
    return c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + "," +
           c_[3].get_str();
  }

  static CycNum from_coord_string(std::string_view s) {
    CycNum r;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t end = s.find(',', start);
      if ((i < 3) == (end == std::string_view::npos))
        throw InputError("expected four comma-separated coordinates: " + std::string(s));
      r.c_[i] = parse_rational(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
      start = end + 1;
    }
    return r;
  }

  /// Human-readable form such as "1+z-z^3" (z = zeta).
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
      const Rational& q = c_[i];
      if (sgn(q) == 0) continue;
      Rational a = abs(q);
      if (sgn(q) < 0)
        os << "-";
      else if (!first)
        os << "+";
      if (i == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum zero_like(const CycNum&) { return CycNum(); }
inline CycNum one_like(const CycNum&) { return CycNum(1); }
inline CycNum field_inverse(const CycNum& x) { return x.inverse(); }
inline std::string to_string(const CycNum& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(a, b);
}

namespace detail {

// a + b i in Q(i)
struct GaussQ {
  Rational a, b;
  GaussQ operator+(const GaussQ& o) const { return {a + o.a, b + o.b}; }
  GaussQ operator-(const GaussQ& o) const { return {a - o.a, b - o.b}; }
  GaussQ operator*(const GaussQ& o) const { return {a * o.a - b * o.b, a * o.b + b * o.a}; }
  GaussQ half() const { return {a / 2, b / 2}; }
  bool zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  GaussQ inverse() const {
    Rational n = a * a + b * b;
    return {a / n, -b / n};
  }
};

inline std::optional<GaussQ> gauss_sqrt(const GaussQ& w) {
  auto n = rational_sqrt(w.a * w.a + w.b * w.b);
  if (!n) return std::nullopt;
  auto x = rational_sqrt((w.a + *n) / 2);
  auto y = rational_sqrt((*n - w.a) / 2);
  if (!x || !y) return std::nullopt;
  GaussQ r{*x, *y};
  if (sgn(w.b) * sgn(r.a * r.b) < 0) r.b = -r.b;
  if (!((r * r).a == w.a && (r * r).b == w.b)) return std::nullopt;
  return r;
}

}  // namespace detail

/// A square root in Q(zeta), if one exists; computed through Q(i)(sqrt 2).
inline std::optional<CycNum> cyc_sqrt(const CycNum& x) {
  using detail::GaussQ;
  if (x.is_zero()) return x;
  GaussQ u{x[0], x[2]}, v{(x[1] - x[3]) / 2, (x[1] + x[3]) / 2};
  auto to_cyc = [](const GaussQ& p, const GaussQ& q) {
    return CycNum(p.a, q.a + q.b, p.b, q.b - q.a);
  };
  GaussQ two{2, 0};
  auto s = detail::gauss_sqrt(u * u - two * v * v);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    GaussQ t = sign > 0 ? (u + *s).half() : (u - *s).half();
    auto xr = detail::gauss_sqrt(t);
    if (!xr) continue;
    GaussQ yr;
    if (xr->zero()) {
      auto y2 = detail::gauss_sqrt(u.half());
      if (!y2) continue;
      yr = *y2;
    } else {
      yr = v * (two * *xr).inverse();
    }
    CycNum r = to_cyc(*xr, yr);
    if (r * r == x) return r;
  }
  return std::nullopt;
}

inline std::optional<Rational> field_sqrt(const Rational& q) { return rational_sqrt(q); }
inline std::optional<CycNum> field_sqrt(const CycNum& x) { return cyc_sqrt(x); }

}  // namespace x56
