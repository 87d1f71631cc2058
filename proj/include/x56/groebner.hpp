// Multivariate division, S-polynomials and Buchberger's algorithm with a
// record of every leading coefficient that was inverted, so that the
// computation can be reduced modulo all primes avoiding those coefficients.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "x56/mpoly.hpp"

namespace x56 {

template <class F>
struct Division {
  std::vector<MPoly<F>> quotients;
  MPoly<F> remainder;
};

/// Standard division: f = sum q_i h_i + r, no term of r divisible by any LT(h_i).
template <class F>
Division<F> divide(const MPoly<F>& f, const std::vector<MPoly<F>>& H) {
  if (H.empty()) throw InputError("division by an empty list");
  for (const auto& h : H)
    if (h.is_zero()) throw InputError("division by zero polynomial");
  Division<F> out;
  for (const auto& h : H) out.quotients.emplace_back(h.nvars(), h.order());
  out.remainder = MPoly<F>(f.nvars(), f.order());
  std::vector<F> inv;
  for (const auto& h : H) inv.push_back(field_inverse(h.lc()));
  MPoly<F> p = f;
  std::vector<typename MPoly<F>::Term> rem;
  while (!p.is_zero()) {
    bool divided = false;
    for (std::size_t i = 0; i < H.size(); ++i) {
      if (!mono_divides(H[i].lm(), p.lm())) continue;
      const Mono m = mono_div(p.lm(), H[i].lm());
      const F c = p.lc() * inv[i];
      out.quotients[i] = out.quotients[i] + MPoly<F>::monomial(f.nvars(), m, c, f.order());
      p = p.minus_term_times(m, c, H[i]);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(p.terms().front());
      p = p.tail();
    }
  }
  out.remainder = MPoly<F>::from_terms(f.nvars(), rem, f.order());
  return out;
}

/// Remainder only, without building quotients.
template <class F>
MPoly<F> reduce_remainder(MPoly<F> p, const std::vector<MPoly<F>>& H) {
  std::vector<typename MPoly<F>::Term> rem;
  std::vector<F> inv;
  for (const auto& h : H) inv.push_back(field_inverse(h.lc()));
  const std::size_t n = p.nvars();
  const MonomialOrder ord = p.order();
  while (!p.is_zero()) {
    bool divided = false;
    for (std::size_t i = 0; i < H.size(); ++i) {
      if (!mono_divides(H[i].lm(), p.lm())) continue;
      p = p.minus_term_times(mono_div(p.lm(), H[i].lm()), p.lc() * inv[i], H[i]);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(p.terms().front());
      p = p.tail();
    }
  }
  return MPoly<F>::from_terms(n, rem, ord);
}

template <class F>
MPoly<F> s_polynomial(const MPoly<F>& f, const MPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of zero");
  const Mono l = mono_lcm(f.lm(), g.lm());
  MPoly<F> a = f.times_term(mono_div(l, f.lm()), field_inverse(f.lc()));
  return a.minus_term_times(mono_div(l, g.lm()), field_inverse(g.lc()), g);
}

template <class F>
struct TrackedGB {
  std::vector<MPoly<F>> basis;  // reduced, monic
  std::vector<F> C;             // leading coefficients of every inserted polynomial, before normalization
  std::size_t pairs_processed = 0;
  std::size_t reductions_to_zero = 0;
};

/// Buchberger with the normal selection strategy (least lcm degree, then the
/// order on lcms, then insertion indices), the coprime and chain criteria,
/// and a final interreduction.
template <class F>
TrackedGB<F> buchberger_tracked(const std::vector<MPoly<F>>& input) {
  TrackedGB<F> out;
  std::vector<MPoly<F>> G;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    out.C.push_back(f.lc());
    G.push_back(f.monic());
  }
  if (G.empty()) return out;
  const MonomialOrder ord = G[0].order();
  struct Pair {
    Mono lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    const int da = mono_degree(a.lcm), db = mono_degree(b.lcm);
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return ord.greater(b.lcm, a.lcm);
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::vector<Pair> B;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      B.push_back({mono_lcm(G[i].lm(), G[j].lm()), i, j});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);
  std::vector<bool> alive(G.size(), true);
  while (!B.empty()) {
    auto it = std::min_element(B.begin(), B.end(), pair_less);
    Pair pr = *it;
    B.erase(it);
    open.erase({pr.i, pr.j});
    if (!alive[pr.i] || !alive[pr.j]) continue;
    if (mono_coprime(G[pr.i].lm(), G[pr.j].lm())) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || !alive[k]) continue;
      if (!mono_divides(G[k].lm(), pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!open.count(key(pr.i, k)) && !open.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;
    ++out.pairs_processed;
    std::vector<MPoly<F>> live;
    for (std::size_t k = 0; k < G.size(); ++k)
      if (alive[k]) live.push_back(G[k]);
    MPoly<F> r = reduce_remainder(s_polynomial(G[pr.i], G[pr.j]), live);
    if (r.is_zero()) {
      ++out.reductions_to_zero;
      continue;
    }
    out.C.push_back(r.lc());
    G.push_back(r.monic());
    alive.push_back(true);
    add_pairs(G.size() - 1);
  }
  // minimal basis
  std::vector<MPoly<F>> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!alive[i]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !alive[j]) continue;
      if (mono_divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  // interreduce: leading terms are untouched, so no new coefficient is inverted
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<MPoly<F>> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    auto lead = MPoly<F>::monomial(M[i].nvars(), M[i].lm(), M[i].lc(), ord);
    M[i] = lead + reduce_remainder(M[i] - lead, others);
  }
  std::sort(M.begin(), M.end(), [&](const MPoly<F>& a, const MPoly<F>& b) { return ord.greater(b.lm(), a.lm()); });
  out.basis = std::move(M);
  return out;
}

/// Post-hoc check: every S-polynomial reduces to zero.
template <class F>
bool is_groebner_basis(const std::vector<MPoly<F>>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (mono_coprime(G[i].lm(), G[j].lm())) continue;
      if (!reduce_remainder(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  return true;
}

template <class F>
std::vector<Mono> leading_monomials(const std::vector<MPoly<F>>& G) {
  std::vector<Mono> out;
  for (const auto& g : G) out.push_back(g.lm());
  std::sort(out.begin(), out.end());
  return out;
}

/// True if for each variable some leading monomial is a pure power of it.
/// For a homogeneous ideal this says the projective zero set is empty.
template <class F>
bool has_pure_powers(const std::vector<MPoly<F>>& G, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : G) {
      const Mono& m = g.lm();
      bool pure = m[v] > 0;
      for (std::size_t w = 0; w < kMaxVars && pure; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found) return false;
  }
  return true;
}

/// The integers d(a) and n(a) for every recorded coefficient.
inline std::vector<Integer> bad_integers(const std::vector<CycNum>& C) {
  std::set<Integer> s;
  for (const CycNum& c : C) {
    auto nd = cyc_norm_and_denominator(c);
    s.insert(abs(nd.denominator));
    s.insert(abs(nd.norm));
  }
  return {s.begin(), s.end()};
}

/// {gcd(a, b) : a in A, b in B} with ones kept only if nothing else remains.
inline std::vector<Integer> gcds(const std::vector<Integer>& A, const std::vector<Integer>& B) {
  std::set<Integer> s;
  for (const Integer& a : A)
    for (const Integer& b : B) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      s.insert(g);
    }
  if (s.size() > 1) s.erase(Integer(1));
  return {s.begin(), s.end()};
}

namespace detail {

/// Pollard rho with Brent's cycle detection; returns a nontrivial factor or 0.
inline Integer rho_factor(const Integer& n, unsigned long c, std::size_t max_steps) {
  auto f = [&](const Integer& x) -> Integer {
    Integer y = x * x + c;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
    return y;
  };
  Integer x = 2, y = 2, g = 1, q = 1, ys;
  std::size_t r = 1, steps = 0;
  const std::size_t m = 64;
  while (g == 1) {
    x = y;
    for (std::size_t i = 0; i < r; ++i) y = f(y);
    for (std::size_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(x - y);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      steps += m;
      if (steps > max_steps) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

/// Prime factors of n.  Throws if a composite
/// part resists Pollard rho.
inline void factor_into(Integer n, std::set<long>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    if (!n.fits_slong_p()) throw InputError("prime factor does not fit in a machine word: " + n.get_str());
    out.insert(n.get_si());
    return;
  }
  for (unsigned long c = 1; c < 20; ++c) {
    Integer d = rho_factor(n, c, 4000000);
    if (d != 0) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
  throw InputError("could not factor " + n.get_str());
}

}  // namespace detail

/// Primes dividing an element of gcds(T1, ..., TN).  Only the final gcds are
/// factored: trial division to 10^6, then Pollard rho on what is left.
inline std::vector<long> bad_primes_intersected(const std::vector<std::vector<Integer>>& runs) {
  if (runs.empty()) throw InputError("need at least one run");
  std::vector<Integer> g = runs[0];
  for (std::size_t k = 1; k < runs.size(); ++k) g = gcds(g, runs[k]);
  std::set<long> primes;
  for (Integer x : g) {
    x = abs(x);
    if (x == 0) throw InputError("zero in a bad-integer set");
    for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= x; ++p) {
      if (!mpz_divisible_ui_p(x.get_mpz_t(), p)) continue;
      primes.insert(static_cast<long>(p));
      while (mpz_divisible_ui_p(x.get_mpz_t(), p)) x /= p;
    }
    detail::factor_into(x, primes);
  }
  return {primes.begin(), primes.end()};
}

/// True if p divides some element of the set.
inline bool divides_any(const std::vector<Integer>& T, long p) {
  for (const Integer& x : T)
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) return true;
  return false;
}

}  // namespace x56
