#include <gtest/gtest.h>

#include "posfact/constructions.hpp"
#include "posfact/framed_braid.hpp"

namespace posfact {
namespace {

TwistWord tw(const SurfacePtr& s, NamedCurve c, int sign = 1) { return TwistWord::twist(s, c, sign); }

TEST(WordT, HasTenChainLettersAndMatchesHomologically) {
  const auto s = make_surface(2, 2);
  const auto t = word_T(s);
  ASSERT_EQ(t.size(), 10u);
  for (const auto& letter : t.letters()) {
    EXPECT_EQ(letter.curve.base.kind, CurveKind::Chain);
    EXPECT_EQ(letter.sign, 1);
  }
  TwistWord rhs = tw(s, NamedCurve::chain(1), -1);
  rhs.append(tw(s, NamedCurve::d(1)));
  rhs.append(tw(s, NamedCurve::d(2)));
  rhs.append(tw(s, NamedCurve::chain(3), -1));
  EXPECT_TRUE(verify_homologically(t, rhs));
}

TEST(Psi, SendsC1D1ToTargets) {
  const auto& psi = make_psi();
  EXPECT_EQ(psi.word.size(), 8u);
  const auto s = psi.word.surface();
  const auto h = homology_action(psi.word);
  EXPECT_EQ(h * s->named_class(NamedCurve::chain(1)), psi.image_c1);
  EXPECT_EQ(h * s->named_class(NamedCurve::d(1)), psi.image_d1);
}

TEST(Psi, SeedChangesOrderButNotLength) {
  for (std::uint64_t seed : {1u, 7u, 42u}) EXPECT_EQ(make_psi(seed).word.size(), 8u);
}

TEST(Psi, ExhaustedSearchThrows) { EXPECT_THROW(make_psi(0, 3), std::runtime_error); }

TEST(Commutator, ProductActsTrivially) {
  for (int m = 1; m <= 3; ++m) {
    const auto [t, c] = commutator_relation(m);
    EXPECT_EQ(t.size(), 10u * static_cast<unsigned>(m));
    EXPECT_TRUE(homology_action(compose(t, c)).is_identity()) << "m=" << m;
  }
  EXPECT_THROW(commutator_relation(0), std::invalid_argument);
}

TEST(PhiFactorization, LengthAndHomology) {
  for (int l = 0; l <= 1; ++l) {
    const auto target = homology_action(expand(phi(l)));
    for (int m : {0, 1, 3}) {
      const auto f = phi_factorization(m, l);
      EXPECT_EQ(f.length(), static_cast<std::size_t>(10 * m + 5 * (2 * l + 6)));
      EXPECT_TRUE(f.word().all_positive());
      EXPECT_EQ(homology_action(f.word()), target) << "m=" << m << " l=" << l;
    }
  }
}

TEST(PushSubsurface, ConjugationMovesIndex) {
  const auto layout = make_layout(0);
  const auto a = tw(layout->subsurface(), NamedCurve::chain(1));
  SwapWord w(layout, {SwapLetter::rho(1, 2), SwapLetter::sub(a, 2)});
  const auto pushed = push_subsurface_letters(w);
  EXPECT_EQ(pushed.prefixes[1].size(), 1u);
  EXPECT_TRUE(pushed.prefixes[2].empty());
  EXPECT_EQ(pushed.swaps.size(), 1u);
  // The rewrite is an identity: both sides agree on homology.
  SwapWord rewritten(layout, {SwapLetter::sub(pushed.prefixes[1], 1), SwapLetter::rho(1, 2)});
  EXPECT_TRUE(verify_homologically(expand(w), expand(rewritten)));
}

TEST(InsertEqualsAppend, TwistWordIdentity) {
  const auto s = make_surface(2, 2);
  const auto w = chain_word(s, 1, 5);
  const TwistLetter x{Curve{NamedCurve::d(1), nullptr}, 1};
  const TwistLetter y{Curve{NamedCurve::chain(2), nullptr}, 1};
  const auto r = insert_equals_append(w, {{3, x}, {0, y}, {3, y}});
  EXPECT_EQ(r.w_tilde.size(), 3u);
  EXPECT_EQ(r.in_place.size(), 8u);
  EXPECT_TRUE(verify_homologically(r.full, r.in_place));
  EXPECT_THROW(insert_equals_append(w, {{1, TwistLetter{x.curve, -1}}}), std::invalid_argument);
  EXPECT_THROW(insert_equals_append(w, {{6, x}}), std::invalid_argument);
}

TEST(InsertEqualsAppend, PhiBecomesCycle) {
  const auto layout = make_layout(0);
  const auto r = insert_equals_append(phi(0), phi_insertions());
  const SwapWord cycle(layout, {SwapLetter::rho(3, 4), SwapLetter::rho(2, 3), SwapLetter::rho(1, 2)});
  EXPECT_TRUE(framed_equal(shadow(r.in_place), shadow(power(cycle, 4))));
  EXPECT_TRUE(exact_equal(r.in_place, power(cycle, 4)));
  EXPECT_TRUE(exact_equal(compose(r.w_tilde_skeleton, phi(0)), r.in_place));
  EXPECT_EQ(r.w_tilde.size(), 42u);
  EXPECT_TRUE(r.w_tilde.all_positive());
  EXPECT_THROW(insert_equals_append(phi(0), {{0, SwapLetter::rho(1, 2, -1)}}),
               std::invalid_argument);
}

TEST(BoundaryFactorization, LengthSkeletonAndHomology) {
  for (int m = 0; m <= 1; ++m) {
    const auto f = boundary_multitwist_factorization(m);
    EXPECT_EQ(f.length(), static_cast<std::size_t>(10 * m + 104));
    ASSERT_TRUE(f.skeleton().has_value());
    EXPECT_TRUE(framed_equal(shadow(*f.skeleton()), boundary_multitwist_framed(4)));
    EXPECT_TRUE(homology_action(f.word()).is_identity());
    EXPECT_EQ(f.notes().size(), f.length());
  }
}

TEST(ExtendToGenus, LengthAndHomology) {
  const auto base = boundary_multitwist_factorization(0);
  const auto f = extend_to_genus(12, base);
  EXPECT_EQ(f.length(), 202u);
  EXPECT_EQ(f.word().surface()->genus(), 12);
  EXPECT_TRUE(f.word().all_positive());
  EXPECT_TRUE(homology_action(f.word()).is_identity());
  EXPECT_EQ(extend_to_genus(13, base).length(), 104u + 27u * 28u - 552u);
  EXPECT_THROW(extend_to_genus(11, base), std::invalid_argument);
}

TEST(PositiveFactorization, RejectsNegativeLetters) {
  const auto s = make_surface(2, 2);
  EXPECT_THROW(PositiveFactorization("x", tw(s, NamedCurve::chain(1), -1)), std::invalid_argument);
}

}  // namespace
}  // namespace posfact
