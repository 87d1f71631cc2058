#include <gtest/gtest.h>

#include <random>

#include "x56/quartic56.hpp"

using namespace x56;

namespace {

struct Setup {
  FermatSurface fs = build_fermat_surface();
  std::vector<CPoly> f = reference_cubics();
  CPoly psi = psi_reference();
  X56Lines xl = lines_on_x56(fs, f, psi);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

TEST(Quartic56, CubicSystem) {
  auto sys = cubics_through_lines(seed_six_lines());
  EXPECT_EQ(sys.basis.size(), 4u);
  for (const auto& g : reference_cubics()) EXPECT_TRUE(sys.contains(g));
  // a cubic that does not vanish on the first seed line
  const auto l1 = seed_six_lines()[0];
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<CPoly::Term> t;
  for (const Mono& m : monomials_of_degree(4, 3)) t.push_back({m, CycNum(c(rng))});
  CPoly g = CPoly::from_terms(4, t);
  if (vanishes_on(g, l1)) GTEST_SKIP() << "random cubic happened to vanish";
  EXPECT_FALSE(sys.contains(g));
}

TEST(Quartic56, ChangeOfBasis) {
  auto sys = cubics_through_lines(seed_six_lines());
  const auto f = reference_cubics();
  CMat C = change_of_basis(sys.basis, f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CPoly acc(4, f[i].order());
    for (std::size_t j = 0; j < sys.basis.size(); ++j) acc = acc + sys.basis[j].with_order(f[i].order()).scaled(C(i, j));
    EXPECT_EQ(acc, f[i]);
  }
}

TEST(Quartic56, PsiFormula) {
  EXPECT_EQ(psi_from_formula(), psi_reference());
  EXPECT_TRUE(psi_reference().is_homogeneous());
  EXPECT_EQ(psi_reference().total_degree(), 4);
}

TEST(Quartic56, DerivePsi) {
  auto d = derive_psi(reference_cubics());
  EXPECT_EQ(d.rows, 290u);
  EXPECT_EQ(d.cols, 35u);
  EXPECT_EQ(d.kernel_dim, 1u);
  EXPECT_EQ(d.psi, psi_reference());
  EXPECT_TRUE(rho_sigma(d.psi, reference_cubics()).is_zero());
}

TEST(Quartic56, DerivePsiOtherBasis) {
  // Swapping f1 and f2 swaps y1 and y2 in the relation.
  auto f = reference_cubics();
  std::swap(f[0], f[1]);
  auto d = derive_psi(f);
  CMat P(4, 4, CycNum(0));
  P(0, 1) = P(1, 0) = P(2, 2) = P(3, 3) = CycNum(1);
  CPoly want = compose_linear(psi_reference(), P);
  const CycNum lead = want.coeff(Mono{3, 1, 0, 0}, CycNum(0));
  ASSERT_FALSE(lead.is_zero());
  EXPECT_EQ(d.psi, want.scaled(lead.inverse()));
}

TEST(Quartic56, RhoDetectsWrongQuartic) {
  CPoly wrong = psi_reference() + CPoly::monomial(4, Mono{4, 0, 0, 0}, CycNum(1));
  EXPECT_FALSE(rho_sigma(wrong, reference_cubics()).is_zero());
}

TEST(Quartic56, Lines) {
  const auto& s = setup();
  EXPECT_EQ(s.xl.classes.size(), reference::lines_x56);
  EXPECT_EQ(s.xl.lines.size(), reference::lines_x56);
  EXPECT_EQ(s.xl.shared, reference::shared_classes);
  EXPECT_EQ(s.xl.h56, h56_vector());
  EXPECT_TRUE(intersections_match(s.fs, s.xl));
  for (const auto& l : s.xl.lines) {
    EXPECT_TRUE(line_on_surface(s.psi, l));
    EXPECT_TRUE(entries_in_z_zeta_third(l));
  }
  for (auto rows : {reference::lambda8(), reference::lambda16(), reference::lambda32()}) {
    const CLine l = line_from_reference(rows);
    EXPECT_TRUE(line_on_surface(s.psi, l));
    EXPECT_NE(std::find(s.xl.lines.begin(), s.xl.lines.end(), l), s.xl.lines.end());
  }
}

TEST(Quartic56, ImageOfBaseLocusLine) {
  // A seed line lies in the base locus; its image is still a line on the quartic.
  const auto& s = setup();
  const CLine img = image_line(s.f, seed_six_lines()[0]);
  EXPECT_TRUE(line_on_surface(s.psi, img));
}

TEST(Quartic56, Automorphisms) {
  const auto& s = setup();
  auto a = aut_x56(s.fs, s.xl, s.psi);
  EXPECT_EQ(a.stabilizer.elements.size(), reference::stabilizer_h56_order);
  EXPECT_EQ(a.group.size(), reference::aut_x56_order);
  EXPECT_TRUE(a.others_have_no_matrix);
  for (int k = 0; k < 2; ++k) {
    EXPECT_TRUE(a.gamma_found[k]);
    EXPECT_EQ(a.gamma_order[k], 4);
    EXPECT_TRUE(a.gamma_preserves_psi[k]);
  }
  EXPECT_TRUE(a.gammas_generate);
  ASSERT_EQ(a.orbits.size(), 3u);
  EXPECT_EQ(a.orbits[0].size(), 8u);
  EXPECT_EQ(a.orbits[1].size(), 16u);
  EXPECT_EQ(a.orbits[2].size(), 32u);
  EXPECT_EQ(a.orbit_of_reference[0], 0);
  EXPECT_EQ(a.orbit_of_reference[1], 1);
  EXPECT_EQ(a.orbit_of_reference[2], 2);
  EXPECT_TRUE(a.h56_from_orbit32);
  EXPECT_TRUE(a.h56_from_orbits_8_16);
  for (const auto& A : a.matrices) EXPECT_TRUE(preserves_up_to_scalar(s.psi, A));
}
