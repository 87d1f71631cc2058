// Reference data for the Fermat quartic, its Neron-Severi basis and the 56-line model.
// Values are frozen here and checked against independent computations in the tests.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace x56::reference {

struct TagData {
  int i, mu, nu;
};

struct TermData {
  std::array<int, 4> exps;
  const char* coeff;  // "c0,c1,c2,c3"
};

/// Tags of the basis lines l_1..l_20.
inline const std::vector<TagData>& basis_tags() {
  static const std::vector<TagData> t = {
      {2, 1, 1}, {2, 1, 3}, {2, 1, 5}, {2, 1, 7}, {2, 3, 1}, {2, 3, 3}, {2, 3, 5},
      {2, 5, 1}, {2, 5, 3}, {2, 5, 5}, {3, 1, 1}, {3, 1, 3}, {3, 1, 5}, {3, 3, 1},
      {3, 3, 3}, {3, 3, 5}, {4, 1, 1}, {4, 1, 3}, {4, 1, 5}, {4, 3, 1},
  };
  return t;
}

inline const std::vector<std::vector<long>>& gram() {
  static const std::vector<std::vector<long>> g = {
      {-2, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {1, -2, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0},
      {1, 1, -2, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
      {1, 1, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 0, -2, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0},
      {0, 1, 0, 0, 1, -2, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 1, 1, -2, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, -2, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 1, 1, 1, -2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -2, 1, 1, 1, 0, 0, 1, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -2, 1, 0, 1, 0, 0, 1, 0, 1},
      {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, -2, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, -2, 1, 1, 0, 1, 0, 1},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, -2, 1, 0, 0, 1, 0},
      {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, -2, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, -2, 1, 1, 1},
      {0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, -2, 1, 0},
      {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, -2, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, -2},
  };
  return g;
}

inline constexpr long gram_determinant = -64;

inline const std::vector<long>& h48() {
  static const std::vector<long> v = {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  return v;
}

/// Lifts of the discriminant generators, dual coordinates.
inline const std::vector<std::vector<long>>& disc_generators() {
  static const std::vector<std::vector<long>> s = {
      {3, 1, 2, 2, 1, 3, 2, 2, 2, 2, 2, 3, 1, 2, 1, 2, 2, 1, 3, 1},
      {1, 3, 1, 1, 1, 1, 3, 2, 1, 0, 1, 1, 2, 2, 3, -1, 1, 2, 0, 2},
  };
  return s;
}

/// Columns of the quotient map from dual coordinates to the generator basis (mod 8).
inline const std::vector<std::vector<long>>& disc_quotient_columns() {
  static const std::vector<std::vector<long>> p = {
      {7, 2, 5, 6, 0, 6, 6, 7, 2, 7, 6, 4, 6, 2, 4, 2, 4, 0, 4, 0},
      {0, 5, 3, 2, 7, 6, 3, 1, 7, 6, 0, 6, 2, 0, 2, 6, 4, 4, 4, 4},
  };
  return p;
}

/// 8 * value matrix of q_S; diagonal mod 16, off-diagonal mod 8.
inline constexpr long qS_times8[2][2] = {{11, 5}, {5, 14}};

inline const std::vector<std::vector<std::vector<long>>>& period_group() {
  static const std::vector<std::vector<std::vector<long>>> g = {
      {{1, 0}, {0, 1}},
      {{3, 3}, {2, 5}},
      {{5, 5}, {6, 3}},
      {{7, 0}, {0, 7}},
  };
  return g;
}

inline const std::vector<std::vector<long>>& transcendental_gram() {
  static const std::vector<std::vector<long>> t = {{8, 0}, {0, 8}};
  return t;
}

inline constexpr std::size_t aut_fermat_order = 1536;
inline constexpr std::size_t stabilizer_h48_order = 6144;
inline constexpr std::size_t orthogonal_T_order = 8;
inline constexpr std::size_t orthogonal_qT_order = 16;
inline constexpr std::size_t period_T_order = 4;

struct PairOrbitData {
  TagData a, b;
  std::size_t size;
  bool intersecting;
  long block[3][3];
};

inline const std::vector<PairOrbitData>& pair_orbits() {
  static const std::vector<PairOrbitData> o = {
      {{2, 1, 1}, {2, 1, 5}, 48, true, {{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}},
      {{2, 1, 1}, {2, 1, 3}, 96, true, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}},
      {{2, 1, 1}, {3, 1, 1}, 192, true, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
      {{2, 1, 1}, {2, 5, 5}, 24, false, {{2, 0, 0}, {0, 0, 0}, {0, 0, 8}}},
      {{2, 1, 1}, {2, 3, 3}, 96, false, {{0, 0, 0}, {0, 2, 0}, {0, 0, 4}}},
      {{2, 1, 1}, {2, 3, 5}, 96, false, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}},
      {{2, 1, 1}, {3, 1, 5}, 192, false, {{0, 0, 2}, {0, 0, 0}, {2, 0, 0}}},
      {{2, 1, 1}, {3, 1, 3}, 384, false, {{0, 0, 0}, {0, 0, 2}, {0, 2, 2}}},
  };
  return o;
}

inline constexpr std::size_t tau_point_count = 24;

/// (l1, l2, m1, m2, m3, m4, n)
inline const std::vector<TagData>& seed_configuration() {
  static const std::vector<TagData> c = {{2, 1, 1}, {2, 5, 5}, {2, 1, 5}, {3, 1, 1}, {3, 3, 3}, {4, 1, 7}, {3, 1, 3}};
  return c;
}

inline const std::vector<long>& h56() {
  static const std::vector<long> v = {1, 2, 1, 2, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, -1, 0, 1, 1, 1, 0};
  return v;
}

inline constexpr std::size_t configuration_count = 6144;

struct CensusData {
  std::size_t total, orbits;
  std::size_t not_nef, not_nef_orbits;
  std::size_t hyperelliptic, hyperelliptic_orbits;
  std::size_t singular, singular_orbits;
  std::size_t very_ample, very_ample_orbits;
};

inline constexpr CensusData census6 = {48264, 60, 792, 5, 792, 5, 46296, 48, 384, 2};
inline constexpr std::size_t census5_size = 48;

inline constexpr const char* coeff_A = "-1,-2,0,-2";

inline const std::vector<TermData>& cubic_f1() {
  static const std::vector<TermData> d = {
      {{3, 0, 0, 0}, "1,1,0,-1"},
      {{2, 0, 1, 0}, "0,1,1,1"},
      {{2, 0, 0, 1}, "1,1,0,0"},
      {{1, 2, 0, 0}, "0,-1,-1,-1"},
      {{1, 1, 1, 0}, "-1,-1,0,0"},
      {{1, 1, 0, 1}, "0,1,1,0"},
      {{1, 0, 2, 0}, "-1,0,0,0"},
      {{1, 0, 1, 1}, "0,1,1,0"},
      {{1, 0, 0, 2}, "0,0,0,-1"},
      {{0, 2, 1, 0}, "1,0,-1,-1"},
      {{0, 1, 2, 0}, "0,-1,-1,0"},
      {{0, 1, 1, 1}, "0,0,1,1"},
      {{0, 0, 3, 0}, "0,0,1,0"},
      {{0, 0, 1, 2}, "1,0,0,0"},
  };
  return d;
}

inline const std::vector<TermData>& cubic_f2() {
  static const std::vector<TermData> d = {
      {{3, 0, 0, 0}, "1,0,0,0"},
      {{2, 0, 1, 0}, "0,0,-1,0"},
      {{2, 0, 0, 1}, "-1,0,0,1"},
      {{1, 2, 0, 0}, "0,0,-1,0"},
      {{1, 1, 1, 0}, "1,0,0,-1"},
      {{1, 1, 0, 1}, "-1,-1,0,0"},
      {{1, 0, 2, 0}, "1,1,0,-1"},
      {{1, 0, 1, 1}, "0,0,-1,-1"},
      {{1, 0, 0, 2}, "-1,-1,-1,0"},
      {{0, 2, 1, 0}, "0,1,0,0"},
      {{0, 1, 2, 0}, "0,0,1,1"},
      {{0, 1, 1, 1}, "1,0,0,-1"},
      {{0, 0, 3, 0}, "0,1,1,1"},
      {{0, 0, 1, 2}, "1,1,0,-1"},
  };
  return d;
}

inline const std::vector<TermData>& cubic_f3() {
  static const std::vector<TermData> d = {
      {{2, 1, 0, 0}, "1,1,1,0"},
      {{2, 0, 0, 1}, "0,1,1,1"},
      {{1, 1, 1, 0}, "-1,-1,0,0"},
      {{1, 1, 0, 1}, "0,1,1,0"},
      {{1, 0, 1, 1}, "0,-1,-1,0"},
      {{1, 0, 0, 2}, "0,0,1,1"},
      {{0, 3, 0, 0}, "1,0,-1,-1"},
      {{0, 2, 1, 0}, "0,-1,-1,0"},
      {{0, 2, 0, 1}, "1,1,1,0"},
      {{0, 1, 2, 0}, "0,0,1,0"},
      {{0, 1, 1, 1}, "0,0,-1,-1"},
      {{0, 1, 0, 2}, "0,0,0,1"},
      {{0, 0, 2, 1}, "0,0,0,1"},
      {{0, 0, 0, 3}, "0,1,0,0"},
  };
  return d;
}

inline const std::vector<TermData>& cubic_f4() {
  static const std::vector<TermData> d = {
      {{2, 1, 0, 0}, "0,-1,0,0"},
      {{2, 0, 0, 1}, "1,0,0,0"},
      {{1, 1, 1, 0}, "-1,0,0,1"},
      {{1, 1, 0, 1}, "1,1,0,0"},
      {{1, 0, 1, 1}, "0,0,-1,-1"},
      {{1, 0, 0, 2}, "-1,0,0,1"},
      {{0, 3, 0, 0}, "0,0,0,1"},
      {{0, 2, 1, 0}, "-1,-1,0,0"},
      {{0, 2, 0, 1}, "0,1,0,0"},
      {{0, 1, 2, 0}, "-1,-1,0,1"},
      {{0, 1, 1, 1}, "1,0,0,-1"},
      {{0, 1, 0, 2}, "-1,0,1,1"},
      {{0, 0, 2, 1}, "1,0,-1,-1"},
      {{0, 0, 0, 3}, "-1,-1,-1,0"},
  };
  return d;
}

inline const std::vector<TermData>& psi_terms() {
  static const std::vector<TermData> d = {
      {{3, 1, 0, 0}, "1,0,0,0"},
      {{2, 1, 0, 1}, "2,-2,0,-2"},
      {{2, 0, 1, 1}, "-1,-2,0,-2"},
      {{1, 3, 0, 0}, "1,0,0,0"},
      {{1, 2, 1, 0}, "2,-2,0,-2"},
      {{1, 1, 2, 0}, "-1,-2,0,-2"},
      {{1, 1, 0, 2}, "-1,-2,0,-2"},
      {{1, 0, 1, 2}, "-2,2,0,2"},
      {{0, 2, 1, 1}, "-1,-2,0,-2"},
      {{0, 1, 2, 1}, "-2,2,0,2"},
      {{0, 0, 3, 1}, "1,0,0,0"},
      {{0, 0, 1, 3}, "1,0,0,0"},
  };
  return d;
}

inline const std::array<std::array<const char*, 4>, 4>& gamma1_matrix() {
  static const std::array<std::array<const char*, 4>, 4> m = {{
      {{"1,0,0,0", "0,0,1,0", "0,-1,1,-1", "1,-1,0,1"}},
      {{"-1,1,0,-1", "0,-1,1,-1", "0,0,-1,0", "1,0,0,0"}},
      {{"-1,0,0,0", "0,0,1,0", "0,-1,1,-1", "-1,1,0,-1"}},
      {{"-1,1,0,-1", "0,1,-1,1", "0,0,1,0", "1,0,0,0"}},
  }};
  return m;
}

inline const std::array<std::array<const char*, 4>, 4>& gamma2_matrix() {
  static const std::array<std::array<const char*, 4>, 4> m = {{
      {{"1,0,0,0", "0,0,1,0", "0,1,1,-1", "1,-1,0,-1"}},
      {{"0,0,1,0", "1,0,0,0", "1,-1,0,-1", "0,1,1,-1"}},
      {{"0,1,1,-1", "1,-1,0,-1", "-1,0,0,0", "0,0,-1,0"}},
      {{"1,-1,0,-1", "0,1,1,-1", "0,0,-1,0", "-1,0,0,0"}},
  }};
  return m;
}

inline const std::vector<std::array<const char*, 4>>& lambda8() {
  static const std::vector<std::array<const char*, 4>> m = {
      {"1,0,0,0", "0,0,0,0", "0,0,0,0", "0,0,1,0"},
      {"0,0,0,0", "1,0,0,0", "0,0,-1,0", "0,0,0,0"},
  };
  return m;
}

inline const std::vector<std::array<const char*, 4>>& lambda16() {
  static const std::vector<std::array<const char*, 4>> m = {
      {"1,0,0,0", "0,0,0,0", "0,0,0,0", "0,-1,1,-1"},
      {"0,0,0,0", "1,0,0,0", "0,-1,1,-1", "0,0,0,0"},
  };
  return m;
}

inline const std::vector<std::array<const char*, 4>>& lambda32() {
  static const std::vector<std::array<const char*, 4>> m = {
      {"1,0,0,0", "0,0,0,0", "0,0,0,0", "0,0,0,0"},
      {"0,0,0,0", "3,0,0,0", "-1,-1,0,-1", "0,-1,1,1"},
  };
  return m;
}

inline constexpr std::size_t lines_x56 = 56;
inline constexpr std::size_t shared_classes = 30;
inline constexpr std::size_t stabilizer_h56_order = 128;
inline constexpr std::size_t aut_x56_order = 64;
inline constexpr std::size_t lines_char3 = 112;

}  // namespace x56::reference
