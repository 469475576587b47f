#include "lensform/spectrum.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lensform;

TEST(Dimensions, Homogeneous) {
  EXPECT_EQ(dim_homogeneous(2, 3), 4);
  EXPECT_EQ(dim_homogeneous(5, 0), 1);
  EXPECT_EQ(dim_homogeneous(4, 2), 10);
  EXPECT_EQ(dim_homogeneous(4, -1), 0);
}

TEST(Dimensions, Harmonic) {
  EXPECT_EQ(dim_harmonic(3, 2), 5);
  EXPECT_EQ(dim_harmonic(4, 2), 9);
  EXPECT_EQ(dim_harmonic(3, 1), 3);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(dim_harmonic(4, k), (k + 1) * (k + 1));
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(dim_harmonic(3, k), 2 * k + 1);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(make_lens(1, {1, 1}), 2), 9);
  EXPECT_EQ(multiplicity(make_lens(2, {1, 1}), 1), 0);
  EXPECT_EQ(multiplicity(make_lens(11, {1, 2, 3}), 2), 2);
  EXPECT_THROW(multiplicity(make_lens(5, {1}), 2), DimensionTooSmall);
}

TEST(Multiplicity, SphereIdentity) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto mult = multiplicities(make_lens(1, std::vector<std::int64_t>(n, 1)), 20);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(mult[static_cast<std::size_t>(k)], dim_harmonic(2 * static_cast<long long>(n), k));
  }
}

TEST(Multiplicity, SpectralInclusion) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const LensSpace lens = oracle::random_lens(rng, 2, 40, n);
    const auto mult = multiplicities(lens, 30);
    EXPECT_EQ(mult[0], 1);
    EXPECT_EQ(mult[1], shell_counts(lens, 1)[1]);
    for (int k = 0; k <= 30; ++k) EXPECT_LE(mult[static_cast<std::size_t>(k)], dim_harmonic(2 * static_cast<long long>(n), k));
    // subgroup of order d | q: same rotation data reduced mod d
    for (std::int64_t d = 1; d < lens.q(); ++d) {
      if (lens.q() % d) continue;
      std::vector<std::int64_t> p = lens.p();
      const auto sub = multiplicities(make_lens(d, p), 30);
      for (int k = 0; k <= 30; ++k) EXPECT_LE(mult[static_cast<std::size_t>(k)], sub[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(SpectrumTable, Rows) {
  const auto sphere = spectrum_table(make_lens(1, {1, 1}), 2).entries;
  EXPECT_EQ(sphere, (std::vector<SpectrumEntry>{{0, 0, 1}, {1, 3, 4}, {2, 8, 9}}));
  const auto rp3 = spectrum_table(make_lens(2, {1, 1}), 2).entries;
  EXPECT_EQ(rp3, (std::vector<SpectrumEntry>{{0, 0, 1}, {1, 3, 0}, {2, 8, 9}}));
  const auto ikeda = spectrum_table(make_lens(11, {1, 2, 3}), 2).entries;
  EXPECT_EQ(ikeda, (std::vector<SpectrumEntry>{{0, 0, 1}, {1, 5, 0}, {2, 12, 2}}));
}

TEST(SpectrumTable, EigenvaluesStrictlyIncrease) {
  const auto rows = spectrum_table(make_lens(7, {1, 3, 5}), 30).entries;
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].lambda, rows[i].lambda);
  EXPECT_EQ(eigenvalue(3, 2), 2 * 6);
}
