// Sparse multivariate polynomials (at most four variables) over an exact
// field, with lex and degree-reverse-lex orderings on a chosen variable priority.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "x56/cyclotomic.hpp"
#include "x56/finite_field.hpp"

namespace x56 {

constexpr std::size_t kMaxVars = 4;

/// The integer n in the field of `like`.
inline Rational scalar_like(const Rational&, long n) { return Rational(n); }
inline CycNum scalar_like(const CycNum&, long n) { return CycNum(n); }
inline FFElem scalar_like(const FFElem& like, long n) { return like.field()->from_int(n); }

using Mono = std::array<int, kMaxVars>;

inline int mono_degree(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono c;
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] = a[i] + b[i];
  return c;
}

inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono c;
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] = a[i] - b[i];
  return c;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono c;
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// priority[0] is the largest variable.
struct MonomialOrder {
  enum class Kind { lex, degrevlex };
  Kind kind = Kind::degrevlex;
  std::array<int, kMaxVars> priority{0, 1, 2, 3};

  static MonomialOrder lex(std::array<int, kMaxVars> p = {0, 1, 2, 3}) { return {Kind::lex, p}; }
  static MonomialOrder degrevlex(std::array<int, kMaxVars> p = {0, 1, 2, 3}) { return {Kind::degrevlex, p}; }

  /// a > b
  bool greater(const Mono& a, const Mono& b) const {
    if (kind == Kind::lex) {
      for (int v : priority)
        if (a[v] != b[v]) return a[v] > b[v];
      return false;
    }
    const int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    for (int k = static_cast<int>(kMaxVars) - 1; k >= 0; --k) {
      const int v = priority[k];
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }

  std::string tag() const {
    std::string s = kind == Kind::lex ? "lex" : "degrevlex";
    s += ":";
    for (int v : priority) s += std::to_string(v);
    return s;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.priority == b.priority;
  }
};

template <class F>
class MPoly {
 public:
  using Term = std::pair<Mono, F>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars, MonomialOrder ord = {}) : n_(nvars), ord_(ord) {
    if (nvars == 0 || nvars > kMaxVars) throw InputError("polynomials support 1 to 4 variables");
  }

  /// From arbitrary terms (duplicates are summed, zeros dropped).
  static MPoly from_terms(std::size_t nvars, const std::vector<Term>& terms, MonomialOrder ord = {}) {
    MPoly p(nvars, ord);
    std::map<Mono, F> acc;
    for (const auto& [m, c] : terms) {
      p.check_mono(m);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, c);
      else
        it->second = it->second + c;
    }
    for (auto& [m, c] : acc)
      if (!x56::is_zero(c)) p.t_.push_back({m, c});
    p.sort_terms();
    return p;
  }

  static MPoly monomial(std::size_t nvars, const Mono& m, const F& c, MonomialOrder ord = {}) {
    return from_terms(nvars, {{m, c}}, ord);
  }

  static MPoly variable(std::size_t nvars, int i, const F& one, MonomialOrder ord = {}) {
    Mono m{};
    m[i] = 1;
    return monomial(nvars, m, one, ord);
  }

  std::size_t nvars() const { return n_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  const Mono& lm() const { return t_.front().first; }
  /// Everything but the leading term.
  MPoly tail() const {
    MPoly r(n_, ord_);
    if (!t_.empty()) r.t_.assign(t_.begin() + 1, t_.end());
    return r;
  }
  const F& lc() const { return t_.front().second; }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, mono_degree(m));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& [m, c] : t_)
      if (mono_degree(m) != mono_degree(t_.front().first)) return false;
    return true;
  }

  /// Coefficient of a monomial (zero_like(reference) if absent).
  F coeff(const Mono& m, const F& zero) const {
    for (const auto& [mm, c] : t_)
      if (mm == m) return c;
    return zero;
  }

  MPoly with_order(const MonomialOrder& ord) const {
    MPoly p = *this;
    p.ord_ = ord;
    p.sort_terms();
    return p;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, true); }
  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& [m, c] : r.t_) c = zero_like(c) - c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_compatible(a, b);
    std::map<Mono, F> acc;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m = mono_mul(ma, mb);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, ca * cb);
        else
          it->second = it->second + ca * cb;
      }
    MPoly r(a.n_, a.ord_);
    for (auto& [m, c] : acc)
      if (!x56::is_zero(c)) r.t_.push_back({m, c});
    r.sort_terms();
    return r;
  }

  MPoly scaled(const F& s) const {
    MPoly r(n_, ord_);
    if (x56::is_zero(s)) return r;
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_) {
      F v = c * s;
      if (!x56::is_zero(v)) r.t_.push_back({m, v});
    }
    return r;
  }

  /// c * x^m * this
  MPoly times_term(const Mono& m, const F& s) const {
    MPoly r(n_, ord_);
    if (x56::is_zero(s)) return r;
    r.t_.reserve(t_.size());
    for (const auto& [mm, c] : t_) r.t_.push_back({mono_mul(mm, m), c * s});
    return r;  // multiplication by a monomial preserves the order
  }

  /// this - c * x^m * g, computed in one merge.
  MPoly minus_term_times(const Mono& m, const F& s, const MPoly& g) const {
    check_compatible(*this, g);
    MPoly r(n_, ord_);
    r.t_.reserve(t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < g.t_.size()) {
      if (j == g.t_.size()) {
        r.t_.push_back(t_[i++]);
        continue;
      }
      Mono gm = mono_mul(g.t_[j].first, m);
      if (i == t_.size() || ord_.greater(gm, t_[i].first)) {
        F v = zero_like(s) - g.t_[j].second * s;
        if (!x56::is_zero(v)) r.t_.push_back({gm, v});
        ++j;
      } else if (ord_.greater(t_[i].first, gm)) {
        r.t_.push_back(t_[i++]);
      } else {
        F v = t_[i].second - g.t_[j].second * s;
        if (!x56::is_zero(v)) r.t_.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  MPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_inverse(lc()));
  }

  MPoly derivative(int v) const {
    MPoly r(n_, ord_);
    for (const auto& [m, c] : t_) {
      if (m[v] == 0) continue;
      Mono mm = m;
      --mm[v];
      F k = c * scalar_like(c, m[v]);
      if (!x56::is_zero(k)) r.t_.push_back({mm, k});
    }
    r.sort_terms();
    return r;
  }

  F evaluate(const std::vector<F>& x) const {
    if (x.size() < n_) throw InputError("evaluation point has too few coordinates");
    F s = zero_like(x[0]);
    for (const auto& [m, c] : t_) {
      F t = c;
      for (std::size_t i = 0; i < n_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * x[i];
      s = s + t;
    }
    return s;
  }

  /// Apply a ring map to the coefficients.
  template <class G, class Map>
  MPoly<G> map_coeffs(Map f) const {
    std::vector<typename MPoly<G>::Term> ts;
    for (const auto& [m, c] : t_) ts.push_back({m, f(c)});
    return MPoly<G>::from_terms(n_, ts, ord_);
  }

  /// Substitute polynomials (all in the same ring) for the variables.
  template <class P>
  P substitute(const std::vector<P>& vals, const P& one) const {
    if (vals.size() < n_) throw InputError("substitution needs one value per variable");
    // powers cache
    std::vector<std::vector<P>> pw(n_);
    P acc = one - one;
    for (const auto& [m, c] : t_) {
      P t = one.scaled(c);
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        while (static_cast<int>(pw[i].size()) < m[i]) pw[i].push_back(pw[i].empty() ? vals[i] : pw[i].back() * vals[i]);
        t = t * pw[i][m[i] - 1];
      }
      acc = acc + t;
    }
    return acc;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << x56::to_string(c) << ")";
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  void check_mono(const Mono& m) const {
    for (std::size_t i = n_; i < kMaxVars; ++i)
      if (m[i] != 0) throw InputError("monomial uses a variable outside the ring");
    for (int e : m)
      if (e < 0) throw InputError("negative exponent");
  }

  void sort_terms() {
    const MonomialOrder o = ord_;
    std::sort(t_.begin(), t_.end(), [&o](const Term& a, const Term& b) { return o.greater(a.first, b.first); });
  }

  static void check_compatible(const MPoly& a, const MPoly& b) {
    if (a.n_ != b.n_ || !(a.ord_ == b.ord_)) throw InputError("polynomials live in different rings or orderings");
  }

  static MPoly combine(const MPoly& a, const MPoly& b, bool subtract) {
    check_compatible(a, b);
    MPoly r(a.n_, a.ord_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.ord_.greater(a.t_[i].first, b.t_[j].first))) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || a.ord_.greater(b.t_[j].first, a.t_[i].first)) {
        F v = subtract ? zero_like(b.t_[j].second) - b.t_[j].second : b.t_[j].second;
        r.t_.push_back({b.t_[j].first, v});
        ++j;
      } else {
        F v = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!x56::is_zero(v)) r.t_.push_back({a.t_[i].first, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t n_ = 0;
  MonomialOrder ord_{};
  std::vector<Term> t_;
};

/// All monomials of total degree d in n variables, in decreasing order for `ord`.
inline std::vector<Mono> monomials_of_degree(std::size_t n, int d, const MonomialOrder& ord = {}) {
  std::vector<Mono> out;
  Mono m{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      m[i] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return ord.greater(a, b); });
  return out;
}

/// Reduce every coefficient at a prime; throws NotIntegralError if one is not P-integral.
inline MPoly<FFElem> reduce_poly(const MPoly<CycNum>& f, const PrimeOfZZeta& P) {
  return f.map_coeffs<FFElem>([&](const CycNum& c) { return reduce_cyc(c, P); });
}

}  // namespace x56
