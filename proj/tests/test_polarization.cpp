#include <gtest/gtest.h>

#include <set>

#include "x56/polarization.hpp"

using namespace x56;

namespace {

struct Setup {
  FermatSurface fs = build_fermat_surface();
  FermatGroups groups = fermat_groups(fs);
  std::vector<IntIsometry> aut = isometries_of_perms(fs, groups.generators);
  std::vector<IntIsometry> galois;
  PairOrbitTable pairs = pair_orbits(fs, groups.generators);
  Setup() {
    for (const auto& [k, p] : groups.galois) galois.push_back(to_int_isometry(isometry_of_line_perm(fs, p)));
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

TEST(Polarization, SmallDegrees) {
  const auto& s = setup();
  for (long d = 1; d <= 3; ++d) EXPECT_TRUE(enumerate_fixed_pairing(s.fs.S, s.fs.h48, d, 4).empty()) << d;
  auto h4 = census_Hd(s.fs, 4, s.aut);
  ASSERT_EQ(h4.vectors.size(), 1u);
  EXPECT_EQ(h4.vectors[0], s.fs.h48);
  EXPECT_EQ(h4.orbits[0].status, PolStatus::very_ample);
  EXPECT_EQ(h4.orbits[0].line_count, 48u);
  auto h5 = census_Hd(s.fs, 5, s.aut);
  EXPECT_EQ(h5.vectors.size(), reference::census5_size);
  EXPECT_EQ(h5.orbits.size(), 1u);
  EXPECT_EQ(h5.orbits[0].status, PolStatus::not_nef);
  EXPECT_FALSE(is_nef_class(s.fs.S, s.fs.h48, h5.vectors[0]));
}

TEST(Polarization, SeedConfiguration) {
  const auto& s = setup();
  X56Config c = seed_configuration();
  EXPECT_TRUE(is_x56_configuration(s.pairs.label, c));
  Vec h = polarization_from_config(s.fs, s.pairs.label, c);
  EXPECT_EQ(h, reference::h56());
  EXPECT_EQ(s.fs.S.norm(h), 4);
  EXPECT_EQ(s.fs.S.pair(h, s.fs.h48), 6);
  auto v = classify_degree4(s.fs.S, s.fs.h48, h);
  EXPECT_EQ(v.status, PolStatus::very_ample);
  EXPECT_EQ(v.line_classes.size(), reference::lines_x56);
  EXPECT_TRUE(is_nef_class(s.fs.S, s.fs.h48, h));
  std::swap(c[0], c[2]);
  EXPECT_FALSE(is_x56_configuration(s.pairs.label, c));
  EXPECT_THROW(polarization_from_config(s.fs, s.pairs.label, c), InputError);
}

TEST(Polarization, Configurations) {
  const auto& s = setup();
  auto all = find_x56_configurations(s.pairs.label);
  EXPECT_EQ(all.size(), reference::configuration_count);
  EXPECT_TRUE(std::binary_search(all.begin(), all.end(), seed_configuration()));
}

TEST(Polarization, CensusDegreeSix) {
  const auto& s = setup();
  auto c = census_Hd(s.fs, 6, s.aut, s.galois);
  const auto& r = reference::census6;
  EXPECT_EQ(c.vectors.size(), r.total);
  EXPECT_EQ(c.orbits.size(), r.orbits);
  EXPECT_EQ(c.by_status[PolStatus::not_nef], std::make_pair(r.not_nef, r.not_nef_orbits));
  EXPECT_EQ(c.by_status[PolStatus::hyperelliptic], std::make_pair(r.hyperelliptic, r.hyperelliptic_orbits));
  EXPECT_EQ(c.by_status[PolStatus::singular_image], std::make_pair(r.singular, r.singular_orbits));
  EXPECT_EQ(c.by_status[PolStatus::very_ample], std::make_pair(r.very_ample, r.very_ample_orbits));
  EXPECT_EQ(c.by_status.count(PolStatus::has_fixed_component), 0u);
  EXPECT_EQ(c.very_ample_orbits_with_galois, 1u);
  for (const auto& o : c.orbits)
    if (o.status == PolStatus::very_ample) EXPECT_EQ(o.line_count, reference::lines_x56);
  // every configuration class is one of the very ample classes
  std::set<Vec> images;
  for (const auto& cfg : find_x56_configurations(s.pairs.label))
    images.insert(polarization_from_config(s.fs, s.pairs.label, cfg));
  std::set<Vec> va(c.very_ample.begin(), c.very_ample.end());
  EXPECT_TRUE(std::includes(va.begin(), va.end(), images.begin(), images.end()));
  EXPECT_EQ(images.size(), va.size());
}
