#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace x56 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bad caller input (wrong shape, non-prime modulus, zero where nonzero is required).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an algorithm does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency check failed: derived data disagrees with itself.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// q reduced into [0, m).
inline Rational mod_positive(const Rational& q, const Rational& m) {
  Rational k = q / m;
  return q - m * Rational(floor_of(k));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }
inline Rational field_inverse(const Rational& q) {
  if (sgn(q) == 0) throw InputError("division by zero");
  return 1 / q;
}

inline Rational parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw InputError("empty rational literal");
  Rational r;
  if (r.set_str(t, 10) != 0) throw InputError("bad rational literal: " + t);
  if (r.get_den() == 0) throw InputError("zero denominator: " + t);
  r.canonicalize();
  return r;
}

inline Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

}  // namespace x56
