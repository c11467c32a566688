#include <gtest/gtest.h>

#include <random>

#include "posfact/framed_braid.hpp"
#include "posfact/garside.hpp"
#include "random_words.hpp"

namespace posfact {
namespace {

using Framing = std::vector<std::int64_t>;

FramedBraid random_framed(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> f(-3, 3);
  return FramedBraid(testing::random_word(rng, 4, length),
                     {f(rng), f(rng), f(rng), f(rng)});
}

TEST(FramedBraid, RejectsWrongFramingLength) {
  EXPECT_THROW(FramedBraid(BraidWord(4), {0, 0}), std::invalid_argument);
}

TEST(FramedBraid, PureFramingsAdd) {
  const auto x = fcompose(FramedBraid::pure_framing(4, {1, 0, 0, 0}),
                          FramedBraid::pure_framing(4, {0, 1, 0, 0}));
  EXPECT_EQ(x.framings(), (Framing{1, 1, 0, 0}));
}

TEST(FramedBraid, IdentityIsNeutral) {
  std::mt19937 rng(1);
  const auto x = random_framed(rng, 8);
  EXPECT_TRUE(framed_equal(fcompose(FramedBraid(4), x), x));
  EXPECT_TRUE(framed_equal(fcompose(x, FramedBraid(4)), x));
}

TEST(FramedBraid, DeltaGenerator) {
  const auto d = delta_framed(1, 2);
  EXPECT_EQ(d.underlying(), BraidWord::generator(4, 1));
  EXPECT_EQ(d.framings(), (Framing{1, 0, 0, 0}));
  EXPECT_EQ(end_permutation(d.underlying()), (std::vector<int>{1, 0, 2, 3}));
  EXPECT_THROW(delta_framed(1, 3), std::invalid_argument);
}

TEST(FramedBraid, RhoGenerator) {
  EXPECT_EQ(rho_framed(1, 2).framings(), (Framing{0, -1, 0, 0}));
  EXPECT_EQ(rho_framed(3, 4).framings(), (Framing{0, 0, 0, -1}));
  EXPECT_THROW(rho_framed(2, 2), std::invalid_argument);
  EXPECT_THROW(rho_framed(0, 2), std::invalid_argument);
  EXPECT_THROW(rho_framed(3, 5), std::invalid_argument);
}

TEST(FramedBraid, RhoSquared) {
  const auto x = fcompose(rho_framed(1, 2), rho_framed(1, 2));
  EXPECT_EQ(x.underlying(), BraidWord(4, {{1, 1}, {1, 1}}));
  EXPECT_EQ(x.framings(), (Framing{-1, -1, 0, 0}));
}

TEST(FramedBraid, EverySwapHasExponentOneAndFramingMinusOne) {
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const auto r = rho_framed(i, j);
      EXPECT_EQ(exponent_sum(r.underlying()), 1);
      EXPECT_EQ(r.total_framing(), -1);
    }
  }
}

TEST(FramedBraid, BoundaryMultitwist) {
  const auto m = boundary_multitwist_framed(4);
  EXPECT_TRUE(equal(m.underlying(), full_twist(4)));
  EXPECT_EQ(m.framings(), (Framing{1, 1, 1, 1}));
  EXPECT_EQ(fpower(m, 2).framings(), (Framing{2, 2, 2, 2}));
  EXPECT_THROW(boundary_multitwist_framed(1), std::invalid_argument);

  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_framed(rng, 10);
    EXPECT_TRUE(framed_equal(fcompose(m, x), fcompose(x, m)));
  }
}

TEST(FramedBraid, FramingDifferenceIsDetected) {
  const auto x = rho_framed(2, 3);
  const auto y = fcompose(x, boundary_framing(4, 1));
  EXPECT_TRUE(equal(x.underlying(), y.underlying()));
  EXPECT_FALSE(framed_equal(x, y));
}

TEST(FramedBraid, CompositionIsAssociative) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_framed(rng, 6);
    const auto b = random_framed(rng, 6);
    const auto c = random_framed(rng, 6);
    const auto left = fcompose(fcompose(a, b), c);
    const auto right = fcompose(a, fcompose(b, c));
    EXPECT_EQ(left.framings(), right.framings());
    EXPECT_EQ(left.underlying(), right.underlying());
    EXPECT_EQ(fcompose(a, b).total_framing(), a.total_framing() + b.total_framing());
  }
}

TEST(FramedBraid, InverseCancels) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_framed(rng, 9);
    EXPECT_TRUE(framed_equal(fcompose(a, finverse(a)), FramedBraid(4)));
    EXPECT_TRUE(framed_equal(fcompose(finverse(a), a), FramedBraid(4)));
  }
}

// Each adjacent rho letter is the delta letter followed by -1 on both of
// the strands it moves, so over a whole word the framings differ by minus
// the number of letters touching each strand.
TEST(FramedBraid, RhoAndDeltaFramingsDifferByTouchCount) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = testing::random_positive_word(rng, 4, 12);
    FramedBraid by_rho(4);
    FramedBraid by_delta(4);
    for (auto letter : w.letters()) {
      by_rho = fcompose(by_rho, rho_framed(letter.index, letter.index + 1));
      by_delta = fcompose(by_delta, delta_framed(letter.index, letter.index + 1));
    }
    std::vector<int> position = {0, 1, 2, 3};
    Framing touches(4, 0);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      const int a = it->index - 1;
      for (int s = 0; s < 4; ++s) {
        if (position[s] == a || position[s] == a + 1) {
          ++touches[s];
          position[s] = position[s] == a ? a + 1 : a;
        }
      }
    }
    for (int s = 0; s < 4; ++s) {
      EXPECT_EQ(by_rho.framings()[s] - by_delta.framings()[s], -touches[s]);
    }
  }
}

TEST(SwapRelations, AllPass) {
  const auto report = verify_swap_braid_relations();
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.braid_part) << c.name;
    EXPECT_TRUE(c.framing_part) << c.name;
  }
  EXPECT_TRUE(report.all_passed());
  EXPECT_GE(report.checks.size(), 8u);
}

TEST(SwapRelations, FullTwistFramings) {
  const auto d = fpower(fcompose(fcompose(delta_framed(3, 4), delta_framed(2, 3)),
                                 delta_framed(1, 2)),
                        4);
  EXPECT_EQ(d.framings(), (Framing{3, 3, 3, 3}));
  const auto r = fpower(fcompose(fcompose(rho_framed(3, 4), rho_framed(2, 3)),
                                 rho_framed(1, 2)),
                        4);
  EXPECT_EQ(r.framings(), (Framing{-3, -3, -3, -3}));
  EXPECT_TRUE(equal(r.underlying(), full_twist(4)));
}

TEST(SwapRelations, BothSpellingsOfLongSwapsAgree) {
  const auto r13 = fcompose(fcompose(rho_framed(2, 3), rho_framed(1, 2)),
                            finverse(rho_framed(2, 3)));
  EXPECT_TRUE(framed_equal(rho_framed(1, 3), r13));
  const auto r24 = fcompose(fcompose(rho_framed(3, 4), rho_framed(2, 3)),
                            finverse(rho_framed(3, 4)));
  EXPECT_TRUE(framed_equal(rho_framed(2, 4), r24));
}

TEST(SwapRelations, DeltaFramingsBreakTheRhoTwistIdentity) {
  const auto report = verify_swap_braid_relations(kDeltaFraming, kDeltaFraming);
  const auto* check = report.find("(rho34 rho23 rho12)^4 = Mb M4^-4 M3^-4 M2^-4 M1^-4");
  ASSERT_NE(check, nullptr);
  EXPECT_TRUE(check->braid_part);
  EXPECT_FALSE(check->framing_part);
  EXPECT_FALSE(report.all_passed());
}

TEST(SwapRelations, SignFlipKeepsBraidPartsOnly) {
  const auto report = verify_swap_braid_relations(kDeltaFraming, SwapFraming{0, 1});
  for (const auto& c : report.checks) EXPECT_TRUE(c.braid_part) << c.name;
  EXPECT_FALSE(report.all_passed());
}

}  // namespace
}  // namespace posfact
