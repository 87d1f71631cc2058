#include <gtest/gtest.h>

#include <random>
#include <set>

#include "x56/finite_field.hpp"

using namespace x56;

namespace {

CycNum kA() { return CycNum(-1, -2, 0, -2); }

CycNum random_cyc(std::mt19937_64& rng, int range = 9, bool fractions = true) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::uniform_int_distribution<int> den(1, fractions ? 6 : 1);
  return CycNum(Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)),
                Rational(coef(rng), den(rng)));
}

// Determinant of the multiplication-by-x map on the power basis; an oracle for the norm
// that does not go through Galois conjugates.
Rational norm_by_determinant(const CycNum& x) {
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) {
    CycNum col = x * CycNum::zeta(i);
    for (int j = 0; j < 4; ++j) m[j][i] = col[j];
  }
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (sgn(m[r][c]) != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

TEST(CycNum, ZetaPowers) {
  EXPECT_EQ(CycNum::zeta(4), CycNum(-1));
  EXPECT_EQ(CycNum::zeta(8), CycNum(1));
  CycNum z = CycNum::zeta();
  CycNum p(1);
  for (int i = 0; i < 8; ++i) p *= z;
  EXPECT_EQ(p, CycNum(1));
  EXPECT_EQ(z.complex_conjugate(), -CycNum::zeta(3));
}

TEST(CycNum, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycNum(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(CycNum, NormMatchesDeterminantOracle) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    CycNum a = random_cyc(rng);
    EXPECT_EQ(a.norm(), norm_by_determinant(a));
  }
  EXPECT_EQ(kA().norm(), norm_by_determinant(kA()));
}

TEST(CycNum, CoordStringRoundTrip) {
  CycNum x(Rational(1, 3), -2, 0, Rational(-7, 9));
  EXPECT_EQ(x.to_coord_string(), "1/3,-2,0,-7/9");
  EXPECT_EQ(CycNum::from_coord_string(x.to_coord_string()), x);
  EXPECT_THROW(CycNum::from_coord_string("1,2,3"), InputError);
  EXPECT_EQ(kA().to_string(), "-1-2*z-2*z^3");
}

TEST(SplitPrime, Two) {
  auto ps = split_prime(2);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].residue_degree, 1);
  EXPECT_EQ(ps[0].ramification, 4);
  EXPECT_EQ(ps[0].residue_field().size(), 2);
}

TEST(SplitPrime, Three) {
  auto ps = split_prime(3);
  ASSERT_EQ(ps.size(), 2u);
  for (const auto& P : ps) {
    EXPECT_EQ(P.residue_degree, 2);
    EXPECT_EQ(P.residue_field().size(), 9);
  }
}

TEST(SplitPrime, SeventeenAgainstBruteForceRoots) {
  std::set<std::int64_t> roots;
  for (std::int64_t a = 0; a < 17; ++a)
    if ((a * a % 17) * (a * a % 17) % 17 == 16) roots.insert(a);
  ASSERT_EQ(roots.size(), 4u);
  auto ps = split_prime(17);
  ASSERT_EQ(ps.size(), 4u);
  std::set<std::int64_t> found;
  for (const auto& P : ps) {
    EXPECT_EQ(P.residue_degree, 1);
    EXPECT_EQ(P.residue_field().size(), 17);
    found.insert(P.residue_field().generator().coords()[0]);
  }
  EXPECT_EQ(found, roots);
}

TEST(SplitPrime, RejectsComposite) {
  EXPECT_THROW(split_prime(15), InputError);
  EXPECT_THROW(split_prime(1), InputError);
}

TEST(SplitPrime, DegreesSumToFourForManyPrimes) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> dist(2, 200000);
  int tested = 0;
  while (tested < 100) {
    std::int64_t p = dist(rng);
    if (!is_probable_prime(Integer(static_cast<long>(p)))) continue;
    ++tested;
    auto ps = split_prime(p);
    int sum = 0;
    for (const auto& P : ps) {
      sum += P.ramification * P.residue_degree;
      // t^4 + 1 vanishes at the image of zeta.
      FFElem t = P.residue_field().generator();
      EXPECT_TRUE((t * t * t * t + P.residue_field().one()).is_zero()) << p;
    }
    EXPECT_EQ(sum, 4) << p;
    if (p > 2) {
      int order = (p % 8 == 1) ? 1 : 2;
      EXPECT_EQ(ps[0].residue_degree, order) << p;
    }
  }
}

TEST(FiniteField, AxiomsAndSqrt) {
  std::mt19937_64 rng(9);
  for (std::int64_t p : {3, 5, 7, 17, 41}) {
    for (const auto& P : split_prime(p)) {
      const auto& F = P.residue_field();
      std::uniform_int_distribution<std::uint64_t> idx(0, F.size().get_ui() - 1);
      for (int it = 0; it < 50; ++it) {
        FFElem a = F.element_at(idx(rng)), b = F.element_at(idx(rng)), c = F.element_at(idx(rng));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), F.one());
        auto s = F.sqrt(a * a);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(*s * *s, a * a);
      }
    }
  }
}

TEST(ReduceCyc, AAtPrimesOverTwoAndThree) {
  auto P2 = split_prime(2)[0];
  EXPECT_EQ(reduce_cyc(kA(), P2), P2.residue_field().one());
  auto ps = split_prime(3);
  int zeros = 0, ones = 0;
  for (const auto& P : ps) {
    FFElem r = reduce_cyc(kA(), P);
    if (r.is_zero()) ++zeros;
    if (r == P.residue_field().one()) ++ones;
  }
  EXPECT_EQ(zeros, 1);
  EXPECT_EQ(ones, 1);
}

TEST(ReduceCyc, OneThirdIsNotIntegralOverThree) {
  for (const auto& P : split_prime(3)) EXPECT_THROW(reduce_cyc(CycNum(Rational(1, 3)), P), NotIntegralError);
}

TEST(ReduceCyc, LocalizationSeesSplitPrimes) {
  // A vanishes at exactly one prime over 3, so A/3 is integral at the other one only.
  CycNum x = kA().scaled(Rational(1, 3));
  int integral = 0;
  for (const auto& P : split_prime(3)) integral += is_P_integral(x, P) ? 1 : 0;
  // A = -1-2sqrt(-2) has norm 9 in Q(sqrt(-2)); the prime of Q(sqrt(-2)) dividing it stays prime
  // in Q(zeta), so v_P3(A) = 2 and A/3 is P3-integral but not P3'-integral.
  EXPECT_EQ(integral, 1);
}

TEST(ReduceCyc, RingHomomorphism) {
  std::mt19937_64 rng(21);
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    for (const auto& P : split_prime(p)) {
      for (int it = 0; it < 40; ++it) {
        CycNum a = random_cyc(rng), b = random_cyc(rng);
        if (!is_P_integral(a, P) || !is_P_integral(b, P)) continue;
        EXPECT_EQ(reduce_cyc(a + b, P), reduce_cyc(a, P) + reduce_cyc(b, P));
        EXPECT_EQ(reduce_cyc(a * b, P), reduce_cyc(a, P) * reduce_cyc(b, P));
      }
    }
  }
}

TEST(NormAndDenominator, Examples) {
  auto one = cyc_norm_and_denominator(CycNum(1));
  EXPECT_EQ(one.denominator, 1);
  EXPECT_EQ(one.norm, 1);
  auto third = cyc_norm_and_denominator(CycNum(Rational(1, 3)));
  EXPECT_EQ(third.denominator, 3);
  // n is the norm of d*x = 1.
  EXPECT_EQ(third.norm, 1);
  auto two_thirds = cyc_norm_and_denominator(CycNum(Rational(2, 3)));
  EXPECT_EQ(two_thirds.denominator, 3);
  EXPECT_EQ(two_thirds.norm, 16);
  auto a = cyc_norm_and_denominator(kA());
  EXPECT_EQ(a.denominator, 1);
  EXPECT_EQ(Rational(a.norm), norm_by_determinant(kA()));
  EXPECT_EQ(a.norm, 81);
  EXPECT_THROW(cyc_norm_and_denominator(CycNum()), InputError);
}
