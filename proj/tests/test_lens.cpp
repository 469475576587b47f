#include "lensform/lens.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lensform;

TEST(MakeLens, NormalizesAndValidates) {
  const LensSpace l = make_lens(7, {1, 2});
  EXPECT_EQ(l.q(), 7);
  EXPECT_EQ(l.p(), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(l.n(), 2u);

  EXPECT_EQ(make_lens(7, {-1, 9}).p(), (std::vector<std::int64_t>{6, 2}));
  EXPECT_EQ(make_lens(1, {1, 1}).p(), (std::vector<std::int64_t>{0, 0}));
  EXPECT_TRUE(make_lens(2, {1, 1}).spectral());
  EXPECT_FALSE(make_lens(5, {2}).spectral());
}

TEST(MakeLens, Errors) {
  try {
    make_lens(4, {2, 1});
    FAIL() << "expected NotCoprime";
  } catch (const NotCoprime& e) {
    EXPECT_EQ(e.index(), 0u);  // first parameter (p1)
  }
  EXPECT_THROW(make_lens(4, {1, 2}), NotCoprime);
  EXPECT_THROW(make_lens(5, {}), EmptyParameters);
  EXPECT_THROW(make_lens(0, {1}), InvalidOrder);
  EXPECT_THROW(make_lens(6, {0, 1}), NotCoprime);
}

TEST(ParseLens, Literals) {
  EXPECT_EQ(parse_lens("11:1,2,3"), make_lens(11, {1, 2, 3}));
  EXPECT_EQ(parse_lens("7:-1,2").p(), (std::vector<std::int64_t>{6, 2}));
  EXPECT_EQ(parse_lens("11:1,2,3").literal(), "11:1,2,3");

  auto token_of = [](const char* text) {
    try {
      parse_lens(text);
    } catch (const ParseError& e) {
      return e.token();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(token_of("11:1,x,3"), "x");
  EXPECT_EQ(token_of("4:2,1"), "2");
  EXPECT_EQ(token_of("abc:1"), "abc");
  EXPECT_EQ(token_of("11"), "11");
  EXPECT_EQ(token_of("11:1,,2"), "");
  EXPECT_EQ(token_of("0:1"), "0");
}

TEST(Isometric, ScalingWitness) {
  const auto w = isometric(make_lens(7, {1, 2}), make_lens(7, {2, 4}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, 2);
  EXPECT_EQ(w->sigma, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(w->eps, (std::vector<int>{1, 1}));
}

TEST(Isometric, IdentityAndMismatch) {
  const LensSpace l = make_lens(11, {1, 2, 4});
  const auto w = isometric(l, l);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (IsometryWitness{1, {0, 1, 2}, {1, 1, 1}}));

  EXPECT_FALSE(isometric(make_lens(5, {1, 1}), make_lens(5, {1, 2})));
  EXPECT_FALSE(isometric(make_lens(5, {1, 1}), make_lens(7, {1, 1})));
  EXPECT_FALSE(isometric(make_lens(5, {1, 1}), make_lens(5, {1, 1, 1})));
}

TEST(Isometric, WitnessMapsSourceToTarget) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const LensSpace a = oracle::random_lens(rng, 1, 13, 1 + trial % 3);
    const LensSpace b = oracle::random_lens(rng, a.q(), a.q(), a.n());
    const auto w = isometric(a, b);
    EXPECT_EQ(w.has_value(), oracle::isometric_brute(a, b)) << a.literal() << " " << b.literal();
    if (w) EXPECT_EQ(apply_witness(*w, a), b.p());
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(make_lens(7, {2, 4})), make_lens(7, {1, 2}));
  EXPECT_EQ(canonical_form(make_lens(1, {3, 5})), make_lens(1, {0, 0}));
  EXPECT_EQ(canonical_form(make_lens(11, {1, 2, 4})), make_lens(11, {1, 2, 4}));
}

TEST(CanonicalForm, MatchesBruteForceOrbitMinimum) {
  for (std::int64_t q = 1; q <= 13; ++q)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(q * 10 + static_cast<std::int64_t>(n)));
      for (int trial = 0; trial < 10; ++trial) {
        const LensSpace a = oracle::random_lens(rng, q, q, n);
        EXPECT_EQ(canonical_form(a).p(), oracle::canonical_brute(a)) << a.literal();
      }
    }
}

TEST(Isometric, EquivalenceRelation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const LensSpace a = oracle::random_lens(rng, 2, 13, n);
    // build b and c inside a's orbit half of the time
    auto perturb = [&](const LensSpace& s) {
      if (rng() % 2) return oracle::random_lens(rng, s.q(), s.q(), s.n());
      const auto units = units_mod(s.q());
      std::vector<std::int64_t> p = s.p();
      const std::int64_t t = units[rng() % units.size()];
      for (auto& v : p) v = (rng() % 2 ? 1 : -1) * t * v;
      std::shuffle(p.begin(), p.end(), rng);
      return make_lens(s.q(), p);
    };
    const LensSpace b = perturb(a);
    const LensSpace c = perturb(b);
    EXPECT_TRUE(isometric(a, a));
    EXPECT_EQ(isometric(a, b).has_value(), isometric(b, a).has_value());
    if (isometric(a, b) && isometric(b, c)) EXPECT_TRUE(isometric(a, c));
  }
}
