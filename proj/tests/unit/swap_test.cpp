#include <gtest/gtest.h>

#include <random>

#include "posfact/garside.hpp"
#include "posfact/lift.hpp"
#include "posfact/swap.hpp"

namespace posfact {
namespace {

SwapWord random_swap_word(std::mt19937& rng, const LayoutPtr& layout, int length) {
  SwapWord w(layout);
  for (int k = 0; k < length; ++k) {
    const int sign = rng() % 2 ? 1 : -1;
    switch (rng() % 4) {
      case 0: {
        const int i = 1 + static_cast<int>(rng() % 3);
        w.push_back(SwapLetter::delta(i, i + 1, sign));
        break;
      }
      case 1:
        w.push_back(SwapLetter::m(1 + static_cast<int>(rng() % 4), sign));
        break;
      default: {
        const int i = 1 + static_cast<int>(rng() % 3);
        const int j = i + 1 + static_cast<int>(rng() % (4 - i));
        w.push_back(SwapLetter::rho(i, j, sign));
      }
    }
  }
  return w;
}

class SwapTest : public ::testing::Test {
 protected:
  LayoutPtr layout = make_layout(0);
  const SurfacePtr& sub() const { return layout->subsurface(); }
  TwistWord t(int k, int sign = 1) const { return TwistWord::twist(sub(), NamedCurve::chain(k), sign); }
};

TEST_F(SwapTest, LayoutDimensions) {
  EXPECT_EQ(layout->genus(), 11);
  EXPECT_EQ(layout->cluster_width(), 6);
  EXPECT_EQ(layout->strands(), 24);
  EXPECT_EQ(layout->surface()->rank(), 23);
  const auto l1 = make_layout(1);
  EXPECT_EQ(l1->genus(), 15);
  EXPECT_EQ(l1->sub_genus(), 3);
  EXPECT_EQ(make_layout(1), l1);
  EXPECT_THROW(SurfaceLayout(-1), std::invalid_argument);
}

TEST_F(SwapTest, SubsurfaceChainsLookLikeChains) {
  const auto& s = *layout->surface();
  for (int i = 1; i <= 4; ++i) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        const auto p = s.pairing(s.named_class(NamedCurve::sub_chain(i, a)),
                                 s.named_class(NamedCurve::sub_chain(i, b)));
        EXPECT_EQ(p, b == a + 1 ? 1 : (a == b + 1 ? -1 : 0));
      }
      for (int j = 1; j <= 4; ++j) {
        if (j == i) continue;
        for (int b = 1; b <= 5; ++b) {
          EXPECT_EQ(s.pairing(s.named_class(NamedCurve::sub_chain(i, a)),
                              s.named_class(NamedCurve::sub_chain(j, b))),
                    0);
        }
      }
    }
  }
}

TEST_F(SwapTest, SubsurfaceBoundaryTwistsAreClusterFullTwists) {
  const int k = layout->cluster_width();
  for (int i = 1; i <= 4; ++i) {
    const auto m = expand(SwapWord(layout, {SwapLetter::m(i)}));
    const auto t_i = lift(full_twist_on(layout->strands(), (i - 1) * k + 1, i * k), layout->surface());
    EXPECT_TRUE(verify_homologically(m, t_i)) << i;
  }
}

TEST_F(SwapTest, EmbedRelabels) {
  EXPECT_TRUE(embed(TwistWord(sub()), 2, *layout).empty());
  const auto w = embed(t(1), 1, *layout);
  EXPECT_EQ(to_string(w), "c(1,1)");
  EXPECT_THROW(embed(TwistWord(make_surface(3, 2)), 1, *layout), std::invalid_argument);
  EXPECT_THROW(embed(t(1), 5, *layout), std::invalid_argument);
}

TEST_F(SwapTest, ExpandedSwapLengths) {
  EXPECT_EQ(expand(SwapWord(layout, {SwapLetter::rho(1, 2)})).size(), 6u);
  EXPECT_EQ(expand(SwapWord(layout, {SwapLetter::rho(2, 4)})).size(), 6u);
  EXPECT_EQ(expand(SwapWord(layout, {SwapLetter::delta(1, 2)})).size(), 10u);
  const auto l1 = make_layout(1);
  EXPECT_EQ(expand(SwapWord(l1, {SwapLetter::rho(1, 2)})).size(), 8u);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      EXPECT_TRUE(expand(SwapWord(layout, {SwapLetter::rho(i, j)})).all_positive());
    }
  }
}

TEST_F(SwapTest, InversePairExpandsTrivially) {
  const SwapWord w(layout, {SwapLetter::rho(1, 3, -1), SwapLetter::rho(1, 3)});
  EXPECT_TRUE(homology_action(expand(w)).is_identity());
}

TEST_F(SwapTest, RejectsBadLetters) {
  SwapWord w(layout);
  EXPECT_THROW(w.push_back(SwapLetter::rho(2, 2)), std::invalid_argument);
  EXPECT_THROW(w.push_back(SwapLetter::rho(3, 5)), std::invalid_argument);
  EXPECT_THROW(w.push_back(SwapLetter::delta(1, 3)), std::invalid_argument);
  EXPECT_THROW(w.push_back(SwapLetter::m(0)), std::invalid_argument);
  EXPECT_THROW(w.push_back(SwapLetter::sub(TwistWord(make_surface(2, 1)), 1)),
               std::invalid_argument);
}

TEST_F(SwapTest, SwapRelationsHoldOnEveryTier) {
  const auto report = verify_swap_relations(layout);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(report.checks.size(), 29u);
}

TEST_F(SwapTest, ShadowIsAHomomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = random_swap_word(rng, layout, 5);
    const auto v = random_swap_word(rng, layout, 5);
    EXPECT_TRUE(framed_equal(shadow(compose(u, v)), fcompose(shadow(u), shadow(v))));
  }
}

TEST_F(SwapTest, ShadowOfSubIsIdentity) {
  EXPECT_TRUE(framed_equal(shadow(SwapWord(layout, {SwapLetter::sub(t(1), 1)})), FramedBraid(4)));
}

TEST_F(SwapTest, PhiShadow) {
  const SwapWord phi(layout, {SwapLetter::rho(2, 4), SwapLetter::rho(1, 3), SwapLetter::rho(3, 4),
                              SwapLetter::rho(2, 3), SwapLetter::rho(1, 2)});
  EXPECT_EQ(exponent_sum(shadow(phi).underlying()), 5);
}

TEST_F(SwapTest, CableLiftsToExpansion) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_swap_word(rng, layout, 4);
    EXPECT_EQ(homology_action(expand(w)),
              homology_action(lift(cable_braid(w), layout->surface())));
  }
}

// The framed shadow and the exact braid tier must agree on swap words.
TEST_F(SwapTest, ShadowAndExactTierAgree) {
  std::mt19937 rng(21);
  int equal_pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = random_swap_word(rng, layout, 3);
    const auto v = random_swap_word(rng, layout, 3);
    const bool framed = framed_equal(shadow(u), shadow(v));
    EXPECT_EQ(framed, exact_equal(u, v)) << to_string(u) << " vs " << to_string(v);
    equal_pairs += framed;
  }
  const auto u = random_swap_word(rng, layout, 6);
  const SwapWord v = adjacent_spelling(u);
  EXPECT_TRUE(framed_equal(shadow(u), shadow(v)));
  EXPECT_TRUE(exact_equal(u, v));
}

TEST_F(SwapTest, AdjacentSpelling) {
  const SwapWord w(layout, {SwapLetter::rho(1, 4, -1)});
  const auto a = adjacent_spelling(w);
  for (const auto& letter : a.letters()) EXPECT_EQ(letter.j, letter.i + 1);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_TRUE(framed_equal(shadow(a), shadow(w)));
  EXPECT_TRUE(verify_homologically(expand(a), expand(w)));
}

TEST_F(SwapTest, SubsurfaceLettersHaveNoBraidModel) {
  EXPECT_THROW(cable_braid(SwapWord(layout, {SwapLetter::sub(t(1), 1)})), std::invalid_argument);
}

TEST_F(SwapTest, ConjugationRelations) {
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 4}, {2, 3}}) {
    const auto report = verify_conjugation_relations(compose(t(1), t(2, -1)), i, j, layout);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << " " << i << j;
  }
  auto d1 = TwistWord::twist(sub(), NamedCurve::d(1));
  d1.append(t(4));
  d1.append(TwistWord::twist(sub(), NamedCurve::boundary(1)));
  EXPECT_TRUE(verify_conjugation_relations(d1, 2, 4, layout).all_passed());
}

TEST_F(SwapTest, WrongConjugationRelationFails) {
  const auto a1 = embed(t(1), 1, *layout);
  const auto& rho = layout->rho_twists(1, 2);
  EXPECT_FALSE(verify_homologically(compose(a1, rho), compose(rho, a1)));
}

TEST_F(SwapTest, SwapsExchangeSubsurfaceChains) {
  const auto& s = *layout->surface();
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const auto h = homology_action(layout->rho_twists(i, j));
      for (int k = 1; k <= 5; ++k) {
        const auto ci = s.named_class(NamedCurve::sub_chain(i, k));
        const auto cj = s.named_class(NamedCurve::sub_chain(j, k));
        EXPECT_EQ(h * cj, ci) << i << j << k;
      }
    }
  }
}

}  // namespace
}  // namespace posfact
