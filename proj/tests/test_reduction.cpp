#include <gtest/gtest.h>

#include "x56/reduction.hpp"

using namespace x56;

namespace {

struct Setup {
  FermatSurface fs = build_fermat_surface();
  CPoly psi = psi_reference();
  X56Lines xl = lines_on_x56(fs, reference_cubics(), psi);
  SmoothnessBound bound = smoothness_bound(psi, default_orderings(true));
  X56Data X;
  Setup() { X = {&fs, &xl, psi, reference_cubics(), dual_line_candidates(fs, xl), &bound}; }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

TEST(Reduction, Fingerprint) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Reduction, BoundContainsTwoAndThree) {
  const auto& s = setup();
  EXPECT_TRUE(s.bound.generic_smooth);
  ASSERT_EQ(s.bound.runs.size(), 3u);
  for (const auto& r : s.bound.runs) EXPECT_TRUE(r.pure_powers) << r.ordering;
  const auto& S = s.bound.primes;
  EXPECT_TRUE(std::count(S.begin(), S.end(), 2));
  EXPECT_TRUE(std::count(S.begin(), S.end(), 3));
}

TEST(Reduction, EveryPrimeInBoundDecided) {
  auto rs = reduction_smoothness(psi_reference(), default_orderings(false));
  for (long p : rs.bound.primes) {
    bool seen = false;
    for (const auto& r : rs.per_prime) seen = seen || r.p == p;
    EXPECT_TRUE(seen) << p;
  }
  for (const auto& r : rs.per_prime)
    if (r.p > 3) EXPECT_TRUE(r.smooth) << r.prime;
}

TEST(Reduction, PrimesOverTwoAndThree) {
  const auto& psi = setup().psi;
  auto [P3, P3b] = primes_over_three();
  auto good = smoothness_report(psi, P3, true);
  EXPECT_TRUE(good.smooth);
  EXPECT_TRUE(good.psi_is_hermitian);
  for (const PrimeOfZZeta& P : {P3b, split_prime(2).front()}) {
    auto r = smoothness_report(psi, P, true);
    EXPECT_FALSE(r.smooth) << P.name();
    EXPECT_FALSE(r.singular_points.empty());
    EXPECT_TRUE(singular_at(psi, P, expected_singular_point(P))) << P.name();
  }
}

TEST(Reduction, LineReductionAtThree) {
  const auto& s = setup();
  auto P3 = primes_over_three().first;
  const FPoly herm = hermitian_quartic(P3);
  for (auto rows : {reference::lambda8(), reference::lambda16(), reference::lambda32()}) {
    FLine l = reduce_line(line_from_reference(rows), P3);
    EXPECT_TRUE(vanishes_on(herm, l));
  }
  auto r = reduction_audit(s.X, P3);
  EXPECT_TRUE(r.reduced_lines_ok);
  EXPECT_EQ(r.with_unique_transversal, s.X.dual.size());
  EXPECT_EQ(r.line_count, static_cast<long>(reference::lines_char3));
}

TEST(Reduction, DualCandidates) {
  const auto& s = setup();
  EXPECT_EQ(s.X.dual.size(), 56u);
  for (const Vec& r : s.X.dual) EXPECT_GE(neighbours_of_dual(s.xl, r).size(), 2u);
}

TEST(Reduction, AuditSample) {
  const auto& s = setup();
  for (long p : audit_primes())
    for (const auto& P : split_prime(p)) {
      auto r = reduction_audit(s.X, P);
      EXPECT_TRUE(r.smooth) << r.prime;
      EXPECT_TRUE(r.reduced_lines_ok) << r.prime;
      EXPECT_TRUE(r.f_independent) << r.prime;
      EXPECT_EQ(r.without_transversal, s.X.dual.size()) << r.prime;
      EXPECT_EQ(r.line_count, 56) << r.prime;
      if (r.gb_comparison_applies) EXPECT_TRUE(r.gb_matches_reduction) << r.prime;
    }
}

TEST(Reduction, SingularPointEnumerationSmall) {
  // the Fermat quartic stays smooth over F_25
  auto P = split_prime(5).front();
  EXPECT_TRUE(singular_points(fermat_polynomial(MonomialOrder::degrevlex()), P).empty());
  EXPECT_TRUE(direct_smoothness(fermat_polynomial(MonomialOrder::degrevlex()), P).smooth);
}
