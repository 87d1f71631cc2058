#include <gtest/gtest.h>

#include <random>

#include "x56/cyclotomic.hpp"
#include "x56/discriminant.hpp"
#include "x56/known_values.hpp"
#include "x56/perm_group.hpp"
#include "x56/projective.hpp"

using namespace x56;

namespace {

Lattice from_rows(const std::vector<std::vector<long>>& rows) {
  QMat m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Rational(rows[i][j]);
  return Lattice(m);
}

DiscForm reference_disc() {
  Lattice S = from_rows(reference::gram());
  const auto& cols = reference::disc_quotient_columns();
  ZMat coord(S.rank(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < S.rank(); ++r) coord(r, c) = cols[c][r];
  std::vector<Vec> gens(reference::disc_generators().begin(), reference::disc_generators().end());
  return discriminant_form(S, gens, coord, {8, 8});
}

using QLine = ProjLine<Rational>;

QLine qline(const std::vector<std::vector<long>>& eq) {
  QMat m(2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rational(eq[i][j]);
  return QLine::from_equations(m);
}

}  // namespace

TEST(Discriminant, ReferenceFormValues) {
  DiscForm d = reference_disc();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational want(reference::qS_times8[i][j], 8);
      EXPECT_EQ(d.values(i, j), reduce_mod(want, i == j ? 2 : 1));
    }
  EXPECT_EQ(d.group_order(), 64);
}

TEST(Discriminant, SmithGeneratorsOfSmallLattices) {
  DiscForm t = discriminant_form(from_rows(reference::transcendental_gram()));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.orders, (std::vector<long>{8, 8}));
  EXPECT_EQ(t.values(0, 0), Rational(1, 8));
  EXPECT_EQ(t.values(1, 1), Rational(1, 8));
  EXPECT_EQ(t.values(0, 1), 0);
  DiscForm u = discriminant_form(from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(u.size(), 0u);
  EXPECT_THROW(discriminant_form(from_rows({{1, 0}, {0, 1}})), InputError);
}

TEST(Discriminant, PeriodGroupOfRankTwoModel) {
  DiscForm qS = reference_disc();
  auto pg = period_group(qS, from_rows(reference::transcendental_gram()));
  EXPECT_EQ(pg.orthogonal_T, reference::orthogonal_T_order);
  EXPECT_EQ(pg.orthogonal_qT, reference::orthogonal_qT_order);
  EXPECT_TRUE(pg.eta_T_injective);
  EXPECT_EQ(pg.period_T, reference::period_T_order);
  EXPECT_EQ(pg.isomorphism_count, 16u);
  EXPECT_TRUE(pg.independent_of_phi);
  std::vector<ModMat> want(reference::period_group().begin(), reference::period_group().end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(pg.gamma, want);
  for (const auto& g : pg.gamma)
    for (const auto& h : pg.gamma)
      EXPECT_NE(std::find(pg.gamma.begin(), pg.gamma.end(), mod_mul(g, h, 8)), pg.gamma.end());
}

TEST(Cyclotomic, SquareRootsRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int t = 0; t < 60; ++t) {
    CycNum x{Rational(c(rng), 1 + (t % 3)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    CycNum sq = x * x;
    auto r = cyc_sqrt(sq);
    ASSERT_TRUE(r.has_value()) << sq.to_string();
    EXPECT_EQ(*r * *r, sq);
  }
  EXPECT_EQ(*cyc_sqrt(CycNum::zeta(2)) * *cyc_sqrt(CycNum::zeta(2)), CycNum::zeta(2));
  EXPECT_FALSE(cyc_sqrt(CycNum::zeta(1)).has_value());
  EXPECT_TRUE(cyc_sqrt(CycNum(Rational(2))).has_value());
  EXPECT_TRUE(cyc_sqrt(CycNum(Rational(-1))).has_value());
  EXPECT_FALSE(cyc_sqrt(CycNum(Rational(3))).has_value());
  EXPECT_FALSE(field_sqrt(Rational(2)).has_value());
  EXPECT_EQ(*field_sqrt(Rational(9, 4)), Rational(3, 2));
}

TEST(Projective, LineBasics) {
  QLine a = qline({{1, 0, 0, 0}, {0, 1, 0, 0}});  // x0 = x1 = 0
  QLine b = qline({{0, 0, 1, 0}, {0, 0, 0, 1}});
  QLine c = qline({{1, 0, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(line_intersection_number(a, a), -2);
  EXPECT_EQ(line_intersection_number(a, b), 0);
  EXPECT_EQ(line_intersection_number(a, c), 1);
  EXPECT_FALSE(lines_meet(a, b));
  EXPECT_TRUE(lines_meet(a, c));
  auto p = meeting_point(a, c);
  EXPECT_EQ(p, (Point3<Rational>{0, 0, 0, 1}));
  QLine a2 = QLine::through(a.points()[0], a.points()[1]);
  EXPECT_EQ(a, a2);
  EXPECT_EQ(QLine::from_pluecker(a.pluecker()), a);
}

TEST(Projective, TransversalCases) {
  // Four lines through one point in one plane: a family of transversals.
  QLine l1 = qline({{1, 0, 0, 0}, {0, 1, 0, 0}});
  QLine l2 = qline({{1, 0, 0, 0}, {0, 0, 1, 0}});
  QLine l3 = qline({{1, 0, 0, 0}, {0, 1, 1, 0}});
  QLine l4 = qline({{1, 0, 0, 0}, {0, 1, 2, 0}});
  EXPECT_EQ(common_intersecting_lines(std::vector<QLine>{l1, l2, l3, l4}).status, TransversalStatus::family);
  // Three lines on the quadric x0 x3 = x1 x2 of one ruling, plus a fourth meeting it twice.
  auto ruling = [](long s) { return qline({{1, -s, 0, 0}, {0, 0, 1, -s}}); };
  std::vector<QLine> r{ruling(0), ruling(1), ruling(2)};
  // x0 = x3 meets the quadric in x0^2 = x1 x2 ... choose a line cutting it in two rational points
  QLine m = qline({{1, 0, 0, -1}, {0, 1, -4, 0}});  // points with x1 = 4 x2, x0 = x3: x0^2 = 4 x2^2
  r.push_back(m);
  auto t = common_intersecting_lines(r);
  EXPECT_EQ(t.status, TransversalStatus::two);
  EXPECT_EQ(t.lines.size(), 2u);
  for (const auto& x : t.lines)
    for (const auto& y : r) EXPECT_TRUE(lines_meet(x, y));
  // Same, but meeting in a conjugate pair: two over the closure, none rational.
  QLine m2 = qline({{1, 0, 0, -1}, {0, 1, 2, 0}});  // x0^2 = -2 x2^2
  r.back() = m2;
  auto t2 = common_intersecting_lines(r);
  EXPECT_EQ(t2.status, TransversalStatus::two);
  EXPECT_TRUE(t2.lines.empty());
  // Four mutually skew lines of one ruling: the other ruling, a family.
  r.back() = ruling(3);
  EXPECT_EQ(common_intersecting_lines(r).status, TransversalStatus::family);
}

TEST(Projective, TransversalsOverFiniteField) {
  auto P = split_prime(7).front();
  const ResidueField& F = *P.field;
  auto e = [&](long v) { return F.from_int(v); };
  auto line = [&](std::vector<std::vector<long>> eq) {
    Mat<FFElem> m(2, 4, F.zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = e(eq[i][j]);
    return ProjLine<FFElem>::from_equations(m);
  };
  std::vector<ProjLine<FFElem>> r;
  for (long s : {0, 1, 2}) r.push_back(line({{1, -s, 0, 0}, {0, 0, 1, -s}}));
  r.push_back(line({{1, 0, 0, -1}, {0, 1, -2, 0}}));  // x0^2 = 2 x2^2, 2 = 3^2 mod 7
  auto t = common_intersecting_lines(r);
  EXPECT_EQ(t.status, TransversalStatus::two);
  EXPECT_EQ(t.lines.size(), 2u);
}

TEST(PermGroup, ClosureAndOrbits) {
  Perm cyc{1, 2, 3, 0, 4}, swap{1, 0, 2, 3, 4};
  auto g = group_closure({cyc, swap}, 5);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_TRUE(is_group(g));
  g.pop_back();
  EXPECT_FALSE(is_group(g));
  auto orb = point_orbits({cyc}, 5);
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[1], (std::vector<int>{4}));
  EXPECT_EQ(perm_order(cyc), 4u);
  EXPECT_EQ(compose(cyc, inverse(cyc)), identity_perm(5));
}
