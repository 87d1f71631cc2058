#include <gtest/gtest.h>

#include "x56/groebner.hpp"
#include "x56/properties.hpp"

using namespace x56;

namespace {

using P = MPoly<CycNum>;

P var(int i, std::size_t n = 4, MonomialOrder ord = MonomialOrder::lex()) { return P::variable(n, i, CycNum(1), ord); }

P fermat(MonomialOrder ord = MonomialOrder::lex()) {
  P f(4, ord);
  for (int i = 0; i < 4; ++i) {
    Mono m{};
    m[i] = 4;
    f = f + P::monomial(4, m, CycNum(1), ord);
  }
  return f;
}

}  // namespace

TEST(MPoly, ArithmeticAndOrders) {
  auto x = var(0), y = var(1);
  P f = x * x * y + y;
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ((f - f).size(), 0u);
  EXPECT_EQ(f.derivative(0), (x * y).scaled(CycNum(2)));
  // lex puts x^1 above y^5, degrevlex the reverse
  Mono a{1, 0, 0, 0}, b{0, 5, 0, 0};
  EXPECT_TRUE(MonomialOrder::lex().greater(a, b));
  EXPECT_TRUE(MonomialOrder::degrevlex().greater(b, a));
  // degrevlex: x y^2 z^0 > x^2 z  (smaller power of the last variable wins)
  EXPECT_TRUE(MonomialOrder::degrevlex().greater(Mono{1, 2, 0, 0}, Mono{2, 0, 1, 0}));
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
  EXPECT_EQ(monomials_of_degree(4, 12).size(), 455u);
}

TEST(MPoly, EvaluateAndSubstitute) {
  auto x = var(0), y = var(1), z = var(2), w = var(3);
  P f = x * y + (z * w).scaled(CycNum::zeta());
  std::vector<CycNum> pt{CycNum(2), CycNum(3), CycNum(1), CycNum::zeta()};
  EXPECT_EQ(f.evaluate(pt), CycNum(6) + CycNum::zeta() * CycNum::zeta());
  // substituting x -> y, y -> x swaps the monomial
  P g = f.substitute(std::vector<P>{y, x, z, w}, P::monomial(4, Mono{}, CycNum(1), f.order()));
  EXPECT_EQ(g, f);
}

TEST(Groebner, DivisionExamples) {
  auto x1 = var(0);
  P F = fermat();
  auto d = divide(x1 * x1 * x1 * x1, {F});
  EXPECT_EQ(d.remainder, x1 * x1 * x1 * x1 - F);
  EXPECT_EQ(d.quotients[0], P::monomial(4, Mono{}, CycNum(1), F.order()));
  EXPECT_TRUE(divide(F, {F}).remainder.is_zero());
  // the identity f = sum q h + r on a two-divisor example
  auto x = var(0), y = var(1), z = var(2);
  P f = x * x * y + x * y * y + y * y;
  std::vector<P> H{x * y - P::monomial(4, Mono{}, CycNum(1), f.order()), y * y - P::monomial(4, Mono{}, CycNum(1), f.order())};
  auto r = divide(f, H);
  EXPECT_EQ(r.quotients[0] * H[0] + r.quotients[1] * H[1] + r.remainder, f);
  EXPECT_EQ(r.remainder, reduce_remainder(f, H));
  EXPECT_THROW(divide(f, {}), InputError);
  (void)z;
}

TEST(Groebner, SPolynomials) {
  auto x = var(0), y = var(1);
  P f = x * x + y.scaled(CycNum::zeta());
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  P a = x * x, b = y * y;
  EXPECT_TRUE(reduce_remainder(s_polynomial(a, b), {a, b}).is_zero());
}

TEST(Groebner, TrackedTrivialIdeal) {
  auto one = P::monomial(4, Mono{}, CycNum(1), MonomialOrder::lex());
  auto T = buchberger_tracked(std::vector<P>{one});
  ASSERT_EQ(T.basis.size(), 1u);
  EXPECT_EQ(T.basis[0], one);
  ASSERT_EQ(T.C.size(), 1u);
  EXPECT_EQ(T.C[0], CycNum(1));
  EXPECT_EQ(bad_integers(T.C), std::vector<Integer>{Integer(1)});
}

TEST(Groebner, TwistedCubicIdeal) {
  // x z - y^2, y w - z^2, x w - y z: already a Groebner basis under degrevlex
  auto ord = MonomialOrder::degrevlex();
  auto x = var(0, 4, ord), y = var(1, 4, ord), z = var(2, 4, ord), w = var(3, 4, ord);
  auto T = buchberger_tracked(std::vector<P>{x * z - y * y, y * w - z * z, x * w - y * z});
  EXPECT_EQ(T.basis.size(), 3u);
  EXPECT_TRUE(is_groebner_basis(T.basis));
  EXPECT_FALSE(has_pure_powers(T.basis, 4));
  // the Fermat Jacobian contains x_i^3
  P F = fermat(ord);
  std::vector<P> jac{F};
  for (int v = 0; v < 4; ++v) jac.push_back(F.derivative(v));
  auto J = buchberger_tracked(jac);
  EXPECT_TRUE(has_pure_powers(J.basis, 4));
  EXPECT_TRUE(is_groebner_basis(J.basis));
}

TEST(Groebner, GcdsExamples) {
  EXPECT_EQ(gcds({Integer(6)}, {Integer(10)}), std::vector<Integer>{Integer(2)});
  EXPECT_EQ(bad_primes_intersected({{Integer(6)}, {Integer(10)}}), std::vector<long>{2});
  EXPECT_EQ(gcds({Integer(4)}, {Integer(9)}), std::vector<Integer>{Integer(1)});
  EXPECT_TRUE(bad_primes_intersected({{Integer(4)}, {Integer(9)}}).empty());
  EXPECT_THROW(bad_primes_intersected({}), InputError);
  // large prime factors need more than trial division
  EXPECT_EQ(bad_primes_intersected({{Integer("1315514278260361")}}), std::vector<long>{36270019});
  EXPECT_EQ(bad_primes_intersected({{Integer(1000003) * 1000033 * 12}}), (std::vector<long>{2, 3, 1000003, 1000033}));
}

TEST(Properties, ReductionCommutes) {
  auto r = reduction_commutes(200);
  EXPECT_EQ(r.cases, 600u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, GroebnerOracle) {
  auto r = gb_reduction_oracle(24);
  EXPECT_GE(r.cases, 20u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, GcdsIdentity) {
  auto r = gcds_identity();
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, EnumerationAndClosure) {
  auto e = enumeration_brute_force();
  EXPECT_TRUE(e.ok()) << e.first_failure;
  auto c = isometry_group_closure();
  EXPECT_TRUE(c.ok()) << c.first_failure;
}
