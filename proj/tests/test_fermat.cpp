#include <gtest/gtest.h>

#include <set>

#include "x56/fermat.hpp"

using namespace x56;

namespace {

const FermatSurface& surface() {
  static const FermatSurface fs = build_fermat_surface();
  return fs;
}

const FermatGroups& groups() {
  static const FermatGroups g = fermat_groups(surface());
  return g;
}

}  // namespace

TEST(Fermat, TagEquations) {
  CLine l = line_from_tag({2, 1, 1});
  EXPECT_TRUE(l.contains({CycNum::zeta(1), CycNum(-1), CycNum(0), CycNum(0)}));
  EXPECT_TRUE(l.contains({CycNum(0), CycNum(0), CycNum::zeta(1), CycNum(-1)}));
  CLine m = line_from_tag({4, 7, 7});
  // x1 + zeta^7 x4 = 0, x2 + zeta^7 x3 = 0
  EXPECT_TRUE(m.contains({CycNum::zeta(7), CycNum(0), CycNum(0), CycNum(-1)}));
  EXPECT_TRUE(m.contains({CycNum(0), CycNum::zeta(7), CycNum(-1), CycNum(0)}));
  EXPECT_THROW(line_from_tag({5, 1, 1}), InputError);
  EXPECT_THROW(line_from_tag({2, 2, 1}), InputError);
}

TEST(Fermat, GramMatchesReference) {
  const auto& fs = surface();
  const auto& ref = reference::gram();
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) EXPECT_EQ(fs.S.gram()(i, j), ref[i][j]) << i << "," << j;
  EXPECT_EQ(fs.S.determinant(), reference::gram_determinant);
  EXPECT_EQ(fs.h48, reference::h48());
  EXPECT_EQ(fs.S.norm(fs.h48), 4);
  EXPECT_EQ(fs.intersection[0][1], 1);
}

TEST(Fermat, LineClassesAreTheMinusTwoVectors) {
  const auto& fs = surface();
  auto f48 = enumerate_fixed_pairing(fs.S, fs.h48, 1, -2);
  EXPECT_EQ(f48.size(), 48u);
  std::vector<Vec> cl = fs.classes;
  std::sort(cl.begin(), cl.end());
  EXPECT_EQ(cl, f48);
  for (std::size_t a = 0; a < 48; ++a)
    for (std::size_t b = 0; b < 48; ++b) ASSERT_EQ(fs.S.ipair(fs.classes[a], fs.classes[b]), fs.intersection[a][b]);
  EXPECT_TRUE(enumerate_fixed_pairing(fs.S, fs.h48, 2, 4).empty());
}

TEST(Fermat, TauPoints) {
  const auto& fs = surface();
  auto tp = tau_points(fs);
  EXPECT_EQ(tp.size(), reference::tau_point_count);
  std::vector<int> per_line(48, 0);
  for (const auto& t : tp) {
    EXPECT_EQ(t.lines.size(), 4u);
    EXPECT_TRUE(is_zero(fermat_value(t.point)));
    for (int l : t.lines) ++per_line[l];
  }
  for (int c : per_line) EXPECT_EQ(c, 2);
}

TEST(Fermat, GaloisPermutesTags) {
  const auto& fs = surface();
  for (int k : {3, 5, 7}) {
    Perm p = galois_permutation(fs, k);
    EXPECT_TRUE(is_permutation(p));
    EXPECT_EQ(perm_order(p), 2u);
  }
  EXPECT_EQ(galois_tag({3, 1, 5}, 3), (LineTag{3, 3, 7}));
}

TEST(Fermat, Groups) {
  const auto& g = groups();
  EXPECT_EQ(g.aut.size(), reference::aut_fermat_order);
  EXPECT_EQ(g.stabilizer.elements.size(), reference::stabilizer_h48_order);
  EXPECT_TRUE(is_group(g.stabilizer.elements));
  EXPECT_EQ(g.hodge.size(), reference::aut_fermat_order);
  EXPECT_TRUE(g.hodge_equals_aut);
  EXPECT_TRUE(g.aut_passes_hodge);
  EXPECT_TRUE(g.generated_by_aut_and_galois);
  for (const auto& [k, p] : g.galois) EXPECT_FALSE(std::binary_search(g.aut.begin(), g.aut.end(), p)) << k;
}

TEST(Fermat, PairOrbits) {
  const auto& fs = surface();
  auto t = pair_orbits(fs, groups().generators);
  ASSERT_TRUE(t.labels_consistent);
  ASSERT_EQ(t.orbits.size(), 8u);
  std::size_t total = 0;
  const auto& ref = reference::pair_orbits();
  auto tau = tau_points(fs);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& o = t.orbits[i];
    EXPECT_EQ(o.label, static_cast<int>(i) + 1);
    EXPECT_EQ(o.size, ref[i].size);
    EXPECT_EQ(o.intersecting, ref[i].intersecting);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) EXPECT_EQ(o.A[j][k], ref[i].block[j][k]) << "o" << i + 1;
    total += o.size;
  }
  EXPECT_EQ(total, 1128u);
  // intersecting pairs meet at a tau-point exactly in o1 and o2
  std::set<Point3<CycNum>> tp;
  for (const auto& x : tau) tp.insert(x.point);
  for (int a = 0; a < 48; ++a)
    for (int b = a + 1; b < 48; ++b)
      if (fs.intersection[a][b] == 1) {
        bool at_tau = tp.count(meeting_point(fs.lines[a], fs.lines[b])) > 0;
        EXPECT_EQ(at_tau, t.label[a][b] <= 2);
      }
}
