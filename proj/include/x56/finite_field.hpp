#pragma once

// Primes of Z[zeta] (zeta a primitive 8th root of unity), their residue
// fields F_p[t]/(g), and the reduction map from P-integral elements of
// Q(zeta) to the residue field.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "x56/cyclotomic.hpp"

namespace x56 {

/// Raised when an element is not in the localization R_P.
struct NotIntegralError : std::domain_error {
  using std::domain_error::domain_error;
};

inline std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t mod_p(const Integer& a, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(r.get_si());
}

inline std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = mod_p(b, p);
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
    b = static_cast<std::int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

class ResidueField;

/// Element of a residue field F_p[t]/(g), coordinates in the basis 1, t, ..., t^(d-1).
class FFElem {
 public:
  FFElem() = default;
  FFElem(const ResidueField& f, std::int64_t n);
  FFElem(const ResidueField& f, std::array<std::int64_t, 4> coords) : f_(&f), c_(coords) {}

  const ResidueField* field() const { return f_; }
  const std::array<std::int64_t, 4>& coords() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator-(const FFElem& a);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }
  FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
  FFElem& operator/=(const FFElem& o) { return *this = *this / o; }
  friend bool operator==(const FFElem& a, const FFElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
  friend bool operator<(const FFElem& a, const FFElem& b) { return a.c_ < b.c_; }

  FFElem pow(const Integer& e) const;
  FFElem inverse() const;
  std::string to_string() const;

 private:
  const ResidueField* f_ = nullptr;
  std::array<std::int64_t, 4> c_{};
};

class ResidueField {
 public:
  /// modulus: monic irreducible g over F_p, ascending coefficients, degree 1..4.
  ResidueField(std::int64_t p, std::vector<std::int64_t> modulus)
      : p_(p), g_(std::move(modulus)), d_(static_cast<int>(g_.size()) - 1) {
    if (d_ < 1 || d_ > 4 || g_.back() != 1) throw InputError("residue field modulus must be monic of degree 1..4");
    size_ = 1;
    for (int i = 0; i < d_; ++i) size_ *= p_;
  }

  std::int64_t characteristic() const { return p_; }
  int degree() const { return d_; }
  const std::vector<std::int64_t>& modulus() const { return g_; }
  const Integer& size() const { return size_; }

  FFElem zero() const { return FFElem(*this, 0); }
  FFElem one() const { return FFElem(*this, 1); }
  FFElem from_int(std::int64_t n) const { return FFElem(*this, n); }
  FFElem from_integer(const Integer& n) const { return FFElem(*this, mod_p(n, p_)); }

  /// The class of t, i.e. the image of zeta.
  FFElem generator() const {
    if (d_ == 1) return FFElem(*this, mod_p(-g_[0], p_));
    std::array<std::int64_t, 4> c{};
    c[1] = 1;
    return FFElem(*this, c);
  }

  /// Elements enumerated by base-p digits of the index, 0 <= index < size().
  FFElem element_at(std::uint64_t index) const {
    std::array<std::int64_t, 4> c{};
    for (int i = 0; i < d_; ++i) {
      c[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_));
      index /= static_cast<std::uint64_t>(p_);
    }
    return FFElem(*this, c);
  }

  bool is_square(const FFElem& a) const {
    if (a.is_zero() || p_ == 2) return true;
    return (a.pow((size_ - 1) / 2)) == one();
  }

  /// A square root, if one exists in this field.
  std::optional<FFElem> sqrt(const FFElem& a) const {
    if (a.is_zero()) return a;
    if (p_ == 2) return a.pow(size_ / 2);
    if (!is_square(a)) return std::nullopt;
    // Tonelli-Shanks in F_q.
    Integer q1 = size_ - 1;
    unsigned s = 0;
    while (mpz_even_p(q1.get_mpz_t())) {
      q1 /= 2;
      ++s;
    }
    FFElem z;
    for (std::uint64_t i = 2;; ++i) {
      z = element_at(i);
      if (!is_square(z)) break;
    }
    FFElem c = z.pow(q1);
    FFElem x = a.pow((q1 + 1) / 2);
    FFElem t = a.pow(q1);
    unsigned m = s;
    while (t != one()) {
      unsigned i = 0;
      FFElem t2 = t;
      while (t2 != one()) {
        t2 = t2 * t2;
        ++i;
      }
      FFElem b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
      x = x * b;
      c = b * b;
      t = t * c;
      m = i;
    }
    return x;
  }

  std::string describe() const {
    std::string s = "F_" + std::to_string(p_);
    if (d_ > 1) s += "[t]/(" + modulus_string() + ")";
    return s;
  }

  std::string modulus_string() const {
    std::string s;
    for (int i = d_; i >= 0; --i) {
      if (g_[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || g_[i] != 1) s += std::to_string(g_[i]);
      if (i > 0) s += (i == 1 ? std::string("t") : "t^" + std::to_string(i));
    }
    return s;
  }

 private:
  friend class FFElem;
  friend FFElem operator-(const FFElem& a);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  std::int64_t p_;
  std::vector<std::int64_t> g_;
  int d_;
  Integer size_;
};

inline FFElem::FFElem(const ResidueField& f, std::int64_t n) : f_(&f) { c_[0] = mod_p(n, f.p_); }

inline FFElem& FFElem::operator+=(const FFElem& o) {
  if (!f_) f_ = o.f_;
  if (!f_) return *this;
  for (int i = 0; i < f_->d_; ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= f_->p_) c_[i] -= f_->p_;
  }
  return *this;
}

inline FFElem& FFElem::operator-=(const FFElem& o) {
  if (!f_) f_ = o.f_;
  if (!f_) return *this;
  for (int i = 0; i < f_->d_; ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += f_->p_;
  }
  return *this;
}

inline FFElem operator-(const FFElem& a) {
  FFElem r = a;
  if (!a.f_) return r;
  for (int i = 0; i < a.f_->d_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : a.f_->p_ - a.c_[i];
  return r;
}

inline FFElem operator*(const FFElem& a, const FFElem& b) {
  const ResidueField* f = a.f_ ? a.f_ : b.f_;
  if (!f) return FFElem();
  const std::int64_t p = f->p_;
  const int d = f->d_;
  if (d == 1) {
    FFElem r(*f, 0);
    r.c_[0] = static_cast<std::int64_t>((__int128)a.c_[0] * b.c_[0] % p);
    return r;
  }
  std::array<std::int64_t, 8> prod{};
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::int64_t>((__int128)a.c_[i] * b.c_[j] % p)) % p;
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    std::int64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i)
      prod[k - d + i] = mod_p(prod[k - d + i] - static_cast<std::int64_t>((__int128)c * f->g_[i] % p), p);
  }
  FFElem r(*f, 0);
  for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
  return r;
}

inline FFElem FFElem::pow(const Integer& e) const {
  if (!f_) throw InputError("power of an unbound finite-field element");
  FFElem r = f_->one();
  FFElem b = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
    b = b * b;
  }
  return r;
}

inline FFElem FFElem::inverse() const {
  if (is_zero()) throw InputError("division by zero in finite field");
  return pow(f_->size_ - 2);
}

inline std::string FFElem::to_string() const {
  if (!f_ || f_->d_ == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (int i = 0; i < f_->d_; ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + "]";
}

inline bool is_zero(const FFElem& x) { return x.is_zero(); }
inline FFElem zero_like(const FFElem& x) { return x.field() ? x.field()->zero() : FFElem(); }
inline FFElem one_like(const FFElem& x) { return x.field()->one(); }
inline FFElem field_inverse(const FFElem& x) { return x.inverse(); }
inline std::string to_string(const FFElem& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const FFElem& x) { return os << x.to_string(); }
inline std::optional<FFElem> field_sqrt(const FFElem& x) {
  if (!x.field()) return x;
  return x.field()->sqrt(x);
}

/// A prime P of Z[zeta] lying over the rational prime p.
struct PrimeOfZZeta {
  std::int64_t p = 0;
  std::vector<std::int64_t> local_factor;  // monic, ascending coefficients
  int residue_degree = 0;
  int ramification = 0;
  int index = 0;  // position among the primes over p
  std::vector<std::vector<std::int64_t>> other_factors;
  std::shared_ptr<const ResidueField> field;

  const ResidueField& residue_field() const { return *field; }
  std::string name() const { return "P(" + std::to_string(p) + "," + std::to_string(index) + ")"; }
};

namespace detail {

inline std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p) {
  ResidueField f(p, {0, 1});
  auto r = f.sqrt(f.from_int(a));
  if (!r) throw InternalError("expected a quadratic residue");
  return r->coords()[0];
}

}  // namespace detail

/// All primes of Z[zeta] over p, from the factorization of t^4+1 over F_p.
inline std::vector<PrimeOfZZeta> split_prime(std::int64_t p) {
  if (p < 2 || !is_probable_prime(Integer(static_cast<long>(p))))
    throw InputError("split_prime: " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t(1) << 31)) throw InputError("split_prime: prime too large for residue arithmetic");
  std::vector<std::vector<std::int64_t>> factors;
  int ram = 1;
  if (p == 2) {
    factors.push_back({1, 1});
    ram = 4;
  } else if (p % 8 == 1) {
    std::int64_t y = 0;
    for (std::int64_t x = 2;; ++x) {
      y = pow_mod(x, (p - 1) / 8, p);
      if (pow_mod(y, 4, p) == p - 1) break;
    }
    for (int k = 1; k < 8; k += 2) factors.push_back({mod_p(-pow_mod(y, k, p), p), 1});
  } else if (p % 8 == 5) {
    std::int64_t b = detail::sqrt_mod_prime(p - 1, p);
    factors.push_back({b, 0, 1});
    factors.push_back({mod_p(-b, p), 0, 1});
  } else {
    // (t^2 + a t + b)(t^2 - a t + b) with b = 1, a^2 = 2 (p = 7 mod 8) or b = -1, a^2 = -2 (p = 3 mod 8).
    std::int64_t b = (p % 8 == 7) ? 1 : p - 1;
    std::int64_t a = detail::sqrt_mod_prime(mod_p(2 * b, p), p);
    factors.push_back({b, a, 1});
    factors.push_back({b, mod_p(-a, p), 1});
  }
  std::sort(factors.begin(), factors.end(), [](const auto& u, const auto& v) {
    return std::lexicographical_compare(u.rbegin(), u.rend(), v.rbegin(), v.rend());
  });
  std::vector<PrimeOfZZeta> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    PrimeOfZZeta P;
    P.p = p;
    P.local_factor = factors[i];
    P.residue_degree = static_cast<int>(factors[i].size()) - 1;
    P.ramification = ram;
    P.index = static_cast<int>(i);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) P.other_factors.push_back(factors[j]);
    P.field = std::make_shared<const ResidueField>(p, factors[i]);
    out.push_back(std::move(P));
  }
  return out;
}

/// Image of an element of Z[zeta] in the residue field of P.
inline FFElem reduce_integral(const CycNum& y, const PrimeOfZZeta& P) {
  const ResidueField& f = *P.field;
  FFElem t = f.generator();
  FFElem r = f.zero();
  FFElem tp = f.one();
  for (int i = 0; i < 4; ++i) {
    if (sgn(y[i]) != 0) r += f.from_integer(y[i].get_num()) * tp;
    tp = tp * t;
  }
  return r;
}

/// Ring-homomorphic reduction of a P-integral element of Q(zeta).
inline FFElem reduce_cyc(const CycNum& x, const PrimeOfZZeta& P) {
  Integer d = x.denominator();
  const Integer p(static_cast<long>(P.p));
  Integer pk = 1;
  Integer m = d;
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    pk *= p;
    ++k;
  }
  CycNum y = x.scaled(Rational(d));
  if (k == 0) return reduce_integral(y, P) / P.field->from_integer(m);
  // u lies in every other prime over p to order k and is a unit at P.
  CycNum u(1);
  for (const auto& g : P.other_factors) {
    CycNum gz;
    for (std::size_t i = 0; i < g.size(); ++i) gz += CycNum::zeta(static_cast<long>(i)).scaled(Rational(g[i]));
    for (unsigned j = 0; j < k; ++j) u *= gz;
  }
  CycNum w = y * u;
  for (int i = 0; i < 4; ++i)
    if (!mpz_divisible_p(w[i].get_num_mpz_t(), pk.get_mpz_t()))
      throw NotIntegralError("element " + x.to_string() + " is not in R_P at " + P.name());
  w = w.scaled(Rational(1) / Rational(pk));
  return reduce_integral(w, P) / reduce_integral(u.scaled(Rational(m)), P);
}

inline bool is_P_integral(const CycNum& x, const PrimeOfZZeta& P) {
  try {
    reduce_cyc(x, P);
    return true;
  } catch (const NotIntegralError&) {
    return false;
  }
}

/// P-adic valuation at an unramified prime (p is a uniformizer there).
inline long valuation(CycNum x, const PrimeOfZZeta& P) {
  if (x.is_zero()) throw InputError("valuation of zero");
  if (P.ramification != 1) throw InputError("valuation implemented for unramified primes only");
  const Rational p(static_cast<long>(P.p));
  long v = 0;
  if (is_P_integral(x, P)) {
    while (reduce_cyc(x, P).is_zero()) {
      x = x.scaled(1 / p);
      ++v;
    }
  } else {
    while (!is_P_integral(x, P)) {
      x = x.scaled(p);
      --v;
    }
  }
  return v;
}

/// An element of Z[zeta] reducing to the given residue.
inline CycNum lift(const FFElem& a) {
  CycNum r;
  const int d = a.field() ? a.field()->degree() : 1;
  for (int i = 0; i < d; ++i) r += CycNum::zeta(i).scaled(Rational(static_cast<long>(a.coords()[i])));
  return r;
}

struct NormAndDenominator {
  Integer denominator;
  Integer norm;
};

/// d(x): least positive integer with d*x integral; n(x): norm of d*x down to Z.
inline NormAndDenominator cyc_norm_and_denominator(const CycNum& x) {
  if (x.is_zero()) throw InputError("cyc_norm_and_denominator of zero");
  Integer d = x.denominator();
  Rational n = x.scaled(Rational(d)).norm();
  if (!is_integer(n)) throw InternalError("norm of an algebraic integer is not an integer");
  return {d, n.get_num()};
}

}  // namespace x56
