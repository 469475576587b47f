#include "lensform/matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lensform;

namespace {

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, i) += c * u(r, j);
  }
  return u;
}

}  // namespace

TEST(Hnf, ShapeAndReduction) {
  const IntMatrix gens{{1, 0, 7}, {-1, 7, 0}};  // columns (1,-1), (0,7), (7,0)
  const IntMatrix h = hermite_normal_form(gens);
  EXPECT_EQ(h, (IntMatrix{{7, 6}, {0, 1}}));
}

TEST(Hnf, InvariantUnderUnimodularRemix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    IntMatrix a(n, n);
    std::uniform_int_distribution<int> d(-6, 6);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    if (determinant(a) == 0) continue;
    const IntMatrix h = hermite_normal_form(a);
    EXPECT_EQ(hermite_normal_form(a * random_unimodular(rng, n)), h);
    EXPECT_EQ(abs(determinant(h)), abs(determinant(a)));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GT(h(i, i), 0);
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
      for (std::size_t j = i + 1; j < n; ++j) {
        EXPECT_GE(h(i, j), 0);
        EXPECT_LT(h(i, j), h(i, i));
      }
    }
  }
}

TEST(Hnf, SingularThrows) { EXPECT_THROW(hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}), SingularBasis); }

TEST(Determinant, Basics) {
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Inverse, ExactRational) {
  const RationalMatrix inv = inverse(IntMatrix{{7, 6}, {0, 1}});
  EXPECT_EQ(inv(0, 0), Rational(1, 7));
  EXPECT_EQ(inv(0, 1), Rational(-6, 7));
  EXPECT_EQ(inv(1, 0), 0);
  EXPECT_EQ(inv(1, 1), 1);
  EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularBasis);
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    EXPECT_EQ(smith_diagonal(a), oracle::determinantal_divisors(a));
  }
}

TEST(MaximalMinors, Gcd) {
  EXPECT_EQ(maximal_minor_gcd(IntMatrix{{1, -6, 7}, {0, 1, 1}}), 1);
  EXPECT_EQ(maximal_minor_gcd(IntMatrix{{2, 0, 2}, {0, 2, 2}}), 4);
}
