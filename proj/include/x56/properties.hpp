// Randomized property suites shared by the unit tests and the acceptance
// runner.  Every check is exact; a suite reports the number of cases it ran
// and how many failed.
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "x56/backtrack.hpp"
#include "x56/groebner.hpp"
#include "x56/lattice.hpp"

namespace x56 {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

namespace detail {

inline CycNum random_cyc(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  return CycNum(Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng)));
}

inline MPoly<CycNum> random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms, int bound,
                                 const MonomialOrder& ord) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::vector<MPoly<CycNum>::Term> t;
  while (static_cast<int>(t.size()) < terms) {
    Mono m{};
    int deg = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      m[v] = e(rng);
      deg += m[v];
    }
    if (deg > max_deg) continue;
    CycNum c = random_cyc(rng, bound);
    if (c.is_zero()) continue;
    t.push_back({m, c});
  }
  return MPoly<CycNum>::from_terms(nvars, t, ord);
}

inline bool p_unit(const CycNum& c, const PrimeOfZZeta& P) {
  return is_P_integral(c, P) && !reduce_cyc(c, P).is_zero();
}

inline MPoly<CycNum> random_unit_lc_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms,
                                         const MonomialOrder& ord, const PrimeOfZZeta& P) {
  while (true) {
    auto f = random_poly(rng, nvars, max_deg, terms, 3, ord);
    if (!f.is_zero() && p_unit(f.lc(), P)) return f;
  }
}

inline std::set<long> prime_divisors(std::vector<long> xs) {
  std::set<long> out;
  for (long x : xs) {
    x = std::labs(x);
    for (long p = 2; p * p <= x; ++p)
      if (x % p == 0) {
        out.insert(p);
        while (x % p == 0) x /= p;
      }
    if (x > 1) out.insert(x);
  }
  return out;
}

}  // namespace detail

/// S(f,g) mod P = S(f mod P, g mod P) and the same for division remainders,
/// when the leading coefficients involved are P-units.
inline PropertyResult reduction_commutes(std::size_t per_prime = 200, std::uint64_t seed = 51) {
  PropertyResult r{"S-polynomial and remainder commute with reduction"};
  std::mt19937_64 rng(seed);
  for (long p : {5L, 7L, 11L}) {
    const PrimeOfZZeta P = split_prime(p).front();
    for (std::size_t k = 0; k < per_prime; ++k) {
      const MonomialOrder ord = k % 2 ? MonomialOrder::lex() : MonomialOrder::degrevlex();
      auto f = detail::random_unit_lc_poly(rng, 3, 4, 4, ord, P);
      auto g = detail::random_unit_lc_poly(rng, 3, 4, 4, ord, P);
      auto h = detail::random_unit_lc_poly(rng, 3, 2, 3, ord, P);
      ++r.cases;
      try {
        if (reduce_poly(s_polynomial(f, g), P) != s_polynomial(reduce_poly(f, P), reduce_poly(g, P)))
          r.fail("S-polynomial mismatch at " + P.name());
        auto a = reduce_poly(reduce_remainder(f, {g, h}), P);
        auto b = reduce_remainder(reduce_poly(f, P), {reduce_poly(g, P), reduce_poly(h, P)});
        if (a != b) r.fail("remainder mismatch at " + P.name());
      } catch (const NotIntegralError&) {
        r.fail("non-integral coefficient at " + P.name());
      }
    }
  }
  return r;
}

/// For small random ideals, the tracked basis reduced at a prime outside
/// the bad set equals the reduced basis computed directly over the residue field.
inline PropertyResult gb_reduction_oracle(std::size_t ideals = 24, std::uint64_t seed = 52) {
  PropertyResult r{"tracked basis reduces to the residue-field basis"};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < ideals; ++k) {
    const std::size_t nvars = 2 + k % 2;
    const MonomialOrder ord = k % 3 == 0 ? MonomialOrder::lex() : MonomialOrder::degrevlex();
    std::vector<MPoly<CycNum>> F;
    const int gens = 2 + static_cast<int>(k % 2);
    for (int i = 0; i < gens; ++i) F.push_back(detail::random_poly(rng, nvars, 2 + static_cast<int>(k % 3), 3, 2, ord));
    auto T = buchberger_tracked(F);
    if (!is_groebner_basis(T.basis)) {
      r.fail("basis over the cyclotomic field fails the S-pair test");
      continue;
    }
    const auto bad = bad_integers(T.C);
    for (long p : {5L, 7L, 11L, 13L, 17L}) {
      if (divides_any(bad, p)) continue;
      for (const PrimeOfZZeta& P : split_prime(p)) {
        ++r.cases;
        try {
          std::vector<MPoly<FFElem>> Gp, Fp;
          for (const auto& g : T.basis) Gp.push_back(reduce_poly(g, P));
          for (const auto& f : F) Fp.push_back(reduce_poly(f, P));
          auto D = buchberger_tracked(Fp);
          if (Gp != D.basis) r.fail("bases differ at " + P.name() + " for ideal " + std::to_string(k));
        } catch (const NotIntegralError&) {
          r.fail("basis not integral at good prime " + P.name());
        }
      }
    }
  }
  return r;
}

/// P(T1) n P(T2) = P(gcds(T1, T2)) on random sets.
inline PropertyResult gcds_identity(std::size_t trials = 200, std::uint64_t seed = 53) {
  PropertyResult r{"prime sets of gcds"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(1, 200000), len(1, 5);
  for (std::size_t k = 0; k < trials; ++k) {
    std::vector<long> A(len(rng)), B(len(rng));
    for (long& a : A) a = val(rng);
    for (long& b : B) b = val(rng);
    std::vector<Integer> IA(A.begin(), A.end()), IB(B.begin(), B.end());
    auto pa = detail::prime_divisors(A), pb = detail::prime_divisors(B);
    std::set<long> want;
    for (long p : pa)
      if (pb.count(p)) want.insert(p);
    auto got = bad_primes_intersected({IA, IB});
    ++r.cases;
    if (std::set<long>(got.begin(), got.end()) != want) r.fail("trial " + std::to_string(k));
  }
  return r;
}

/// Fixed-pairing enumeration against a box search on random hyperbolic lattices of rank 2 to 4.
inline PropertyResult enumeration_brute_force(std::uint64_t seed = 54) {
  PropertyResult r{"fixed-pairing enumeration equals box search"};
  std::mt19937_64 rng(seed);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      QMat d(n, n, Rational(0));
      d(0, 0) = 2;
      for (std::size_t i = 1; i < n; ++i) d(i, i) = -2 - static_cast<long>(i % 2) * 2;
      ZMat W = identity_matrix<Integer>(n, Integer(1));
      std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), c(-1, 1);
      for (int s = 0; s < 6; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int k = c(rng);
        for (std::size_t t = 0; t < n; ++t) W(i, t) += k * W(j, t);
      }
      Lattice L(detail::congruence(W, d));
      QMat Winv = inverse(to_rational(W), Rational(1));
      auto image = [&](const Vec& z) {
        Vec y(n, 0);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) y[j] += z[i] * Winv(i, j).get_num().get_si();
        return y;
      };
      Vec e0(n, 0);
      e0[0] = 1;
      const Vec h = image(e0);
      for (long a : {0L, 2L, 4L})
        for (long b : {-2L, -4L, 0L}) {
          ++r.cases;
          // In the diagonal model every solution has coordinates bounded by 4.
          std::vector<Vec> want;
          Vec z(n, -4);
          while (true) {
            Vec y = image(z);
            if (L.pair(h, y) == a && L.norm(y) == b) want.push_back(y);
            std::size_t i = 0;
            while (i < n && z[i] == 4) z[i++] = -4;
            if (i == n) break;
            ++z[i];
          }
          std::sort(want.begin(), want.end());
          if (enumerate_fixed_pairing(L, h, a, b) != want)
            r.fail("rank " + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
  return r;
}

/// Backtracked automorphism groups of the A2 and D4 root systems are closed
/// groups of the known orders and consist of isometries.
inline PropertyResult isometry_group_closure() {
  PropertyResult r{"backtracked root-system groups"};
  struct Case {
    std::vector<std::vector<long>> cartan;
    std::size_t order;
  };
  const std::vector<Case> cases = {
      {{{2, -1}, {-1, 2}}, 12},
      {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, 1152},
  };
  for (const auto& c : cases) {
    const std::size_t n = c.cartan.size();
    QMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(c.cartan[i][j]);
    Lattice L(g);
    std::vector<Vec> roots;
    Vec x(n, -2);
    while (true) {
      if (L.norm(x) == 2) roots.push_back(x);
      std::size_t i = 0;
      while (i < n && x[i] == 2) x[i++] = -2;
      if (i == n) break;
      ++x[i];
    }
    auto st = backtrack_stabilizer(L, roots);
    ++r.cases;
    if (st.elements.size() != c.order) r.fail("order " + std::to_string(st.elements.size()) + " for rank " + std::to_string(n));
    if (!is_group(st.elements)) r.fail("not closed in rank " + std::to_string(n));
    for (const Perm& p : st.elements)
      if (!is_isometry(L, isometry_of(st, p))) {
        r.fail("non-isometry in rank " + std::to_string(n));
        break;
      }
  }
  return r;
}

}  // namespace x56
