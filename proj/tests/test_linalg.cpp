#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rrb/linalg.hpp"

using namespace rrb;

namespace {

Matrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(gen);
  return m;
}

}  // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(frac(6, 4)), "3/2");
  EXPECT_EQ(to_string(frac(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(to_string(frac(0, 5)), "0");
  EXPECT_EQ(parse_rational("-4/6"), frac(-2, 3));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(Matrix(2, 2)), 0u);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Matrix(0, 3)), 0u);
  EXPECT_EQ(rank(Matrix{{frac(1, 2), frac(1, 3)}, {3, 2}}), 1u);
}

TEST(Kernel, SmallCases) {
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(2, 4)).dim(), 4u);
  Subspace k = kernel(Matrix{{1, 1}});
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vector{1, -1}));
  EXPECT_FALSE(k.contains(Vector{1, 1}));
}

TEST(Image, SmallCases) {
  EXPECT_EQ(image(Matrix::identity(3)), Subspace::full(3));
  EXPECT_EQ(image(Matrix(3, 2)).dim(), 0u);
  Subspace im = image(Matrix{{1}, {2}});
  EXPECT_EQ(im, Subspace(2, {{1, 2}}));
  EXPECT_TRUE(im.contains(Vector{-2, -4}));
}

TEST(Subspace, CanonicalBasisMakesEqualityStructural) {
  Subspace a(3, {{1, 2, 0}, {0, 1, 1}});
  Subspace b(3, {{1, 3, 1}, {2, 3, -1}, {1, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
}

TEST(Subspace, Membership) {
  EXPECT_TRUE(Subspace(2, {{0, 1}}).contains(Vector{0, 0}));
  EXPECT_FALSE(Subspace(2, {{0, 1}}).contains(Vector{1, 0}));
  EXPECT_THROW((void)Subspace(2, {}).contains(Vector{1}), DimensionError);
}

TEST(QuotientDim, ContainmentAndWitness) {
  Subspace outer = Subspace::full(3);
  Subspace inner(3, {{1, 1, 1}});
  EXPECT_EQ(quotient_dim(outer, inner), 2u);
  EXPECT_EQ(quotient_dim(inner, inner), 0u);
  try {
    (void)quotient_dim(inner, outer);
    FAIL() << "expected ContainmentError";
  } catch (const ContainmentError& e) {
    EXPECT_FALSE(inner.contains(e.witness));
    EXPECT_TRUE(outer.contains(e.witness));
  }
}

TEST(Solve, PreimageIsVerifiedBySubstitution) {
  Matrix m{{1, 1}};
  auto x = solve(m, Vector{3});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m * *x, (Vector{3}));
  EXPECT_FALSE(solve(Matrix{{1, 0}, {1, 0}}, Vector{1, 2}).has_value());
  EXPECT_THROW((void)solve(m, Vector{1, 2}), DimensionError);
}

TEST(Intersection, Basic) {
  Subspace a(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace b(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(intersection(a, b), Subspace(3, {{0, 1, 0}}));
}

TEST(LinalgProperties, RankNullity) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = gen() % 6, c = gen() % 6;
    Matrix m = random_matrix(gen, r, c);
    // sparsify so that rank-deficient cases occur often
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (gen() % 3 == 0) m(i, j) = 0;
    Subspace k = kernel(m);
    EXPECT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(image(m).dim(), rank(m));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(LinalgProperties, ImageOfProductInsideImage) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + gen() % 4, k = 1 + gen() % 4, c = 1 + gen() % 4;
    Matrix a = random_matrix(gen, r, k), b = random_matrix(gen, k, c);
    EXPECT_TRUE(image(a).contains(image(a * b)));
  }
}

TEST(LinalgProperties, EchelonIndependentOfRowOrder) {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + gen() % 5, c = 1 + gen() % 5;
    Matrix m = random_matrix(gen, r, c);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    std::vector<Vector> shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_EQ(Subspace(c, rows), Subspace(c, shuffled));
    EXPECT_EQ(rref(m).reduced, rref(Matrix::from_rows(c, shuffled)).reduced);
  }
}

TEST(LinalgProperties, RrefMatchesRationalGaussOnFractions) {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = frac(long(gen() % 7) - 3, 1 + long(gen() % 4));
    Echelon e = rref(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.reduced(i, e.pivots[i]), 1);
      for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        if (r != i) EXPECT_EQ(e.reduced(r, e.pivots[i]), 0);
    }
    EXPECT_EQ(kernel(m), kernel(e.reduced));
  }
}
