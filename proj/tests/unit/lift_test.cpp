#include <gtest/gtest.h>

#include <random>

#include "posfact/dynnikov.hpp"
#include "posfact/garside.hpp"
#include "posfact/lift.hpp"
#include "random_words.hpp"

namespace posfact {
namespace {

TEST(Lift, HalfTwistLiftsToChainPattern) {
  const auto w = lift(half_twist(6));
  ASSERT_EQ(w.size(), 15u);
  EXPECT_EQ(w.surface()->genus(), 2);
  EXPECT_EQ(to_string(w), "c1 c2 c3 c4 c5 c1 c2 c3 c4 c1 c2 c3 c1 c2 c1");
  EXPECT_TRUE(w.all_positive());
}

TEST(Lift, RejectsOddStrandCounts) {
  EXPECT_THROW(lift(BraidWord(5)), std::invalid_argument);
  EXPECT_THROW(lift(BraidWord(6), make_surface(3, 2)), std::invalid_argument);
}

TEST(Lift, TrivialPairLiftsTrivially) {
  const auto w = lift(BraidWord(4, {{1, 1}, {1, -1}}));
  EXPECT_TRUE(homology_action(w).is_identity());
}

TEST(Lift, RespectsFreeReduction) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = free_reduce(testing::random_word(rng, 6, 20));
    const auto t = lift(w);
    for (std::size_t k = 1; k < t.size(); ++k) {
      const auto& a = t.letters()[k - 1];
      const auto& b = t.letters()[k];
      EXPECT_FALSE(a.curve.base == b.curve.base && a.sign == -b.sign);
    }
  }
}

TEST(Lift, EqualBraidsHaveEqualActions) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = testing::random_word(rng, 8, 12);
    const auto y = testing::scramble(rng, x, 4);
    EXPECT_EQ(homology_action(lift(x)), homology_action(lift(y)));
  }
}

TEST(Lift, BandLiftsToDerivedCurve) {
  const auto surface = make_surface(2, 2);
  const BraidWord conj(6, {{2, 1}});
  const auto c = lift_band(conj, 1, surface);
  ASSERT_FALSE(c.is_named());
  EXPECT_EQ(homology_action(TwistWord(surface, {{c, 1}})),
            homology_action(lift(band(1, 3, conj))));
}

TEST(Lift, DeltaSquareLiftsToBoundaryMultitwist) {
  for (int g = 1; g <= 5; ++g) EXPECT_TRUE(verify_delta_square_lift(g)) << g;
  const auto perturbed = compose(full_twist(6), BraidWord::generator(6, 1));
  EXPECT_FALSE(verify_delta_square_lift(2, perturbed));
  EXPECT_THROW(verify_delta_square_lift(0), std::invalid_argument);
}

TEST(Cable, WidthOneIsTheUnderlyingBraid) {
  const FramedBraid x(BraidWord(3, {{1, 1}, {2, -1}}), {0, 0, 0});
  EXPECT_EQ(cable(x, 1), x.underlying());
}

TEST(Cable, IsAHomomorphism) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const FramedBraid a(testing::random_word(rng, 3, 5),
                        {static_cast<std::int64_t>(rng() % 3) - 1, 0, 1});
    const FramedBraid b(testing::random_word(rng, 3, 5),
                        {1, static_cast<std::int64_t>(rng() % 3) - 1, 0});
    EXPECT_TRUE(equal(cable(fcompose(a, b), 3), compose(cable(a, 3), cable(b, 3))));
  }
}

TEST(BandFactorization, CertifiedForSmallGenera) {
  for (int gp = 1; gp <= 4; ++gp) {
    const auto& f = rho_band_factorization(gp);
    EXPECT_EQ(f.size(), static_cast<std::size_t>(2 * gp + 2));
    EXPECT_EQ(f.strands, 4 * gp + 4);
    for (std::size_t k = 0; k < f.size(); ++k) {
      EXPECT_EQ(exponent_sum(f.band_word(k)), 1);
    }
    EXPECT_EQ(exponent_sum(swap_braid(gp)), static_cast<std::int64_t>(f.size()));
    EXPECT_TRUE(equal(f.product(), swap_braid(gp)));
    EXPECT_TRUE(dynnikov_equal(f.product(), swap_braid(gp)));
  }
  EXPECT_THROW(rho_band_factorization(0), std::invalid_argument);
}

TEST(BandFactorization, SixBandsAtGenusTwo) {
  // 66 crossings in the half twist minus 2 * 30 in the two full twists.
  EXPECT_EQ(exponent_sum(swap_braid(2)), 6);
  EXPECT_EQ(rho_band_factorization(2).size(), 6u);
}

TEST(BandFactorization, LiftIsPositiveAndMatchesSwapBraid) {
  const auto surface = make_surface(5, 2);
  const auto& f = rho_band_factorization(2);
  const auto t = lift_bands(f, surface);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_TRUE(t.all_positive());
  EXPECT_EQ(homology_action(t), homology_action(lift(swap_braid(2), surface)));
}

}  // namespace
}  // namespace posfact
