#include <gtest/gtest.h>

#include <random>

#include "x56/lattice.hpp"

using namespace x56;

namespace {

QMat qmat(const std::vector<std::vector<long>>& rows) {
  QMat m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

// Every integer vector in the box |x_i| <= r.
template <class F>
void for_box(std::size_t n, long r, F f) {
  Vec x(n, -r);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
}

// diag(2, -2, -2, ...) twisted by a random unimodular matrix.
Lattice random_hyperbolic(std::mt19937_64& rng, std::size_t n, ZMat* basis = nullptr) {
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
  if (basis) *basis = W;
  return Lattice(detail::congruence(W, d));
}

}  // namespace

TEST(Lattice, BasicInvariants) {
  Lattice L(qmat({{2, 1}, {1, -2}}));
  EXPECT_TRUE(L.integral());
  EXPECT_TRUE(L.even());
  EXPECT_EQ(L.determinant(), -5);
  EXPECT_EQ(L.signature(), std::make_pair(1, 1));
  EXPECT_TRUE(L.hyperbolic());
  EXPECT_EQ(L.pair({1, 0}, {0, 1}), 1);
  EXPECT_THROW(Lattice(qmat({{1, 2}, {3, 1}})), InputError);
  EXPECT_THROW(Lattice(qmat({{1, 1}, {1, 1}})), InputError);
}

TEST(Lattice, SignatureWithZeroDiagonal) {
  Lattice U(qmat({{0, 1}, {1, 0}}));
  EXPECT_EQ(U.signature(), std::make_pair(1, 1));
  Lattice M(qmat({{0, 1, 0}, {1, 0, 0}, {0, 0, -4}}));
  EXPECT_EQ(M.signature(), std::make_pair(1, 2));
}

TEST(Lattice, DualIsInverse) {
  Lattice L(qmat({{2, 1}, {1, -2}}));
  Lattice D = L.dual();
  EXPECT_EQ(D.gram() * L.gram(), identity_matrix<Rational>(2, Rational(1)));
  EXPECT_FALSE(D.integral());
}

TEST(Lattice, FixedPairingSmallExample) {
  // diag(2,-2): <h,x> = 2 and <x,x> = -2 with h = (1,0) means x = (1, +-1) ... norm 0; need x0 = 1
  // and 2 - 2 y^2 = -2, so y = +-sqrt2: nothing. With <h,x> = 0 we get (0, +-1).
  Lattice L(qmat({{2, 0}, {0, -2}}));
  auto v = enumerate_fixed_pairing(L, {1, 0}, 0, -2);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (Vec{0, -1}));
  EXPECT_EQ(v[1], (Vec{0, 1}));
  EXPECT_TRUE(enumerate_fixed_pairing(L, {1, 0}, 2, -2).empty());
  // <h,x> = 4, <x,x> = 0: (2, +-2)
  auto w = enumerate_fixed_pairing(L, {1, 0}, 4, 0);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], (Vec{2, -2}));
  EXPECT_THROW(enumerate_fixed_pairing(L, {0, 1}, 0, -2), PreconditionError);
}

TEST(Lattice, FixedPairingMatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 4; ++trial) {
      ZMat W;
      Lattice L = random_hyperbolic(rng, n, &W);
      // h = image of the positive basis vector of the diagonal model, written in L's coordinates.
      QMat Winv = inverse(to_rational(W), Rational(1));
      Vec h(n);
      for (std::size_t j = 0; j < n; ++j) h[j] = Winv(0, j).get_num().get_si();
      ASSERT_EQ(L.norm(h), 2);
      for (long a : {0L, 2L, 4L}) {
        for (long b : {-2L, -4L, 0L}) {
          auto got = enumerate_fixed_pairing(L, h, a, b);
          // In the diagonal model |y_0| = a/2 and the other coordinates are bounded by |a|/2 + 1,
          // so a box of radius 6 on W^{-1} images is generous for these small values.
          std::vector<Vec> want;
          Vec y(n);
          for_box(n, 4, [&](const Vec& z) {
            for (std::size_t j = 0; j < n; ++j) {
              long s = 0;
              for (std::size_t i = 0; i < n; ++i) s += z[i] * Winv(i, j).get_num().get_si();
              y[j] = s;
            }
            if (L.pair(h, y) == a && L.norm(y) == b) want.push_back(y);
          });
          std::sort(want.begin(), want.end());
          EXPECT_EQ(got, want) << "n=" << n << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(Lattice, SliceWithNormWindow) {
  Lattice L(qmat({{2, 0, 0}, {0, -2, 0}, {0, 0, -6}}));
  SliceEnumerator e(L, {{1, 0, 0}});
  auto got = e.run({Rational(2)}, Rational(-8), Rational(0));
  std::vector<Vec> want;
  for_box(3, 6, [&](const Vec& x) {
    if (L.pair({1, 0, 0}, x) == 2) {
      Rational q = L.norm(x);
      if (q >= -8 && q <= 0) want.push_back(x);
    }
  });
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_TRUE(e.run({Rational(1)}, Rational(-8), Rational(0)).empty());
}

TEST(Lattice, SeparatingHyperbolicPlane) {
  // U + <-2>: classes with <h,x> > 0 > <h2,x> and x^2 = -2.
  Lattice L(qmat({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}));
  Vec h{1, 2, 0}, h2{2, 1, 0};
  auto got = enumerate_separating(L, h, h2, -2);
  std::vector<Vec> want;
  for_box(3, 8, [&](const Vec& x) {
    if (L.pair(h, x) > 0 && L.pair(h2, x) < 0 && L.norm(x) == -2) want.push_back(x);
  });
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_FALSE(got.empty());
  EXPECT_TRUE(enumerate_separating(L, h, h, -2).empty());
  EXPECT_FALSE(is_nef_class(L, h, h2));
  EXPECT_TRUE(is_nef_class(L, h, Vec{2, 4, 0}));
  EXPECT_TRUE(is_nef_class(L, Vec{1, 1, 0}, Vec{1, 2, 0}));
}

TEST(Lattice, SeparatingRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    Lattice L(qmat({{2, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -4}}));
    Vec h{1, 0, 0, 0};
    std::uniform_int_distribution<long> c(-1, 1);
    Vec h2{2, c(rng), c(rng), c(rng)};
    if (L.norm(h2) <= 0 || L.pair(h, h2) <= 0) continue;
    auto got = enumerate_separating(L, h, h2, -2);
    std::vector<Vec> want;
    for_box(4, 6, [&](const Vec& x) {
      if (L.pair(h, x) > 0 && L.pair(h2, x) < 0 && L.norm(x) == -2) want.push_back(x);
    });
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << vec_str(h2);
  }
}

TEST(Lattice, ReflectionIsIsometry) {
  Lattice L(qmat({{2, 1, 0}, {1, -2, 0}, {0, 0, -2}}));
  Vec r{0, 0, 1};
  ZMat R = reflection_matrix(L, r);
  EXPECT_TRUE(is_isometry(L, R));
  EXPECT_EQ(apply_isometry(r, R), (Vec{0, 0, -1}));
  EXPECT_EQ(R * R, identity_matrix<Integer>(3, Integer(1)));
}

TEST(Lattice, LllProducesUnimodularReduction) {
  QMat g = qmat({{10, 7, 3}, {7, 10, 5}, {3, 5, 9}});
  ZMat B = identity_matrix<Integer>(3, Integer(1));
  B(2, 0) = 5;
  B(2, 1) = -4;
  B(1, 0) = 3;
  QMat g2 = detail::congruence(B, g);
  ZMat W = detail::lll_gram(g2);
  EXPECT_EQ(abs(det(W)), 1);
  QMat r = detail::congruence(W, g2);
  // Size reduced: |2 g_ij| <= g_ii for j < i.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(2 * r(i, j)), r(j, j) + r(i, i));
  EXPECT_LE(r(0, 0), g(0, 0));
}

TEST(Matrix, SmithForm) {
  ZMat A(std::vector<std::vector<Integer>>{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm s = smith_form(A);
  EXPECT_EQ(s.U * A * s.V, s.D);
  ASSERT_EQ(s.diagonal.size(), 3u);
  EXPECT_EQ(s.diagonal[0], 2);
  EXPECT_EQ(s.diagonal[1], 6);
  EXPECT_EQ(s.diagonal[2], 12);
  EXPECT_EQ(abs(det(s.U)), 1);
  EXPECT_EQ(abs(det(s.V)), 1);
}

TEST(Matrix, KernelAndSolve) {
  QMat m = qmat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank_of(m), 2u);
  auto k = kernel(m, Rational(1));
  ASSERT_EQ(k.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dot(m.row(i), k[0]), 0);
  std::vector<Rational> x;
  ASSERT_TRUE(solve_left(m, {Rational(3), Rational(4), Rational(7)}, x, Rational(1)));
  EXPECT_EQ(vec_mat(x, m), (std::vector<Rational>{3, 4, 7}));
  QMat inv = inverse(qmat({{2, 1}, {1, 1}}), Rational(1));
  EXPECT_EQ(inv, qmat({{1, -1}, {-1, 2}}));
}

TEST(Matrix, IntegerRowEchelon) {
  ZMat A(std::vector<std::vector<Integer>>{{4, 6}, {6, 9}, {2, 5}});
  RowEchelon e = integer_row_echelon(A);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(abs(det(e.U)), 1);
  ZMat UA = e.U * A;
  for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(UA(2, j), 0);
}
