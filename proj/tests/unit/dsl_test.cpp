#include <gtest/gtest.h>

#include <random>

#include "posfact/constructions.hpp"
#include "posfact/dsl.hpp"
#include "posfact/report.hpp"
#include "random_words.hpp"

namespace posfact {
namespace {

void expect_round_trip(const Document& d) {
  const auto text = print(d);
  const auto back = parse(text);
  EXPECT_EQ(print(back), text);
  EXPECT_EQ(back.size(), d.size());
}

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(0, 0, "", "");
}

TEST(Dsl, BraidExample) {
  const auto d = parse("@braid n=3\nb1 b2 b1");
  EXPECT_EQ(d.kind, DocumentKind::Braid);
  EXPECT_EQ(d.braid, BraidWord(3, {{1, 1}, {2, 1}, {1, 1}}));
}

TEST(Dsl, SwapExampleIsPhi) {
  const auto d = parse("@swap l=0\nrho(2,4) rho(1,3) rho(3,4) rho(2,3) rho(1,2)");
  EXPECT_EQ(print(d), print(Document::of(phi(0))));
}

TEST(Dsl, PowersCommentsAndCanonicalForm) {
  const auto d = parse("# a comment\n@braid n=4   # trailing\n\n b3^2  b1^-2 # more\n b2\n");
  EXPECT_EQ(d.braid.size(), 5u);
  EXPECT_EQ(print(d),
            "# composition is right to left: the rightmost letter acts first\n"
            "@braid n=4\nb3 b3 b1^-1 b1^-1 b2\n");
}

TEST(Dsl, DetachedSuffixIsAnError) {
  const auto e = parse_error("@braid n=3\nb1 ^-1");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 4);
  EXPECT_EQ(e.token(), "^-1");
}

TEST(Dsl, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error("@braid n=3\nb1 b3").column(), 4);
  EXPECT_EQ(parse_error("@twist g=2 s=2\nc1 q7").token(), "q7");
  EXPECT_EQ(parse_error("@twist g=2 s=2\nc(1,2)").line(), 2);  // no layout tags
  EXPECT_EQ(parse_error("@swap l=0\nrho(1)").line(), 2);
  EXPECT_EQ(parse_error("@swap l=0\ndelta(1,3)").line(), 2);
  EXPECT_EQ(parse_error("@braid\nb1").line(), 1);
  EXPECT_EQ(parse_error("@knot n=3\n").line(), 1);
  EXPECT_EQ(parse_error("@braid n=3 q=1\n").column(), 12);
  EXPECT_EQ(parse_error("b1 b2").line(), 1);
  EXPECT_EQ(parse_error("@braid n=3\nb1^0").line(), 2);
}

TEST(Dsl, TwistTokens) {
  const auto d = parse("@twist g=2 s=2\nc1 d2^-1 delta1 img(c2 c3^-1; c1)^2");
  ASSERT_EQ(d.twist.size(), 5u);
  EXPECT_FALSE(d.twist.letters()[4].curve.is_named());
  expect_round_trip(d);
  const auto layout = parse("@twist g=11 s=2 l=0\nc(2,1) d(3,2) bd(F4,1)");
  EXPECT_EQ(layout.twist.surface(), make_layout(0)->surface());
  expect_round_trip(layout);
}

TEST(Dsl, SwapTokens) {
  const auto d = parse("@swap l=0\nrhoA(1,3; c1 d1^-1) sub(c2; F3)^-1 sub(; F1) M(2)^3 Mb delta(1,2)");
  EXPECT_EQ(d.swap.size(), 8u);
  expect_round_trip(d);
}

TEST(Dsl, FramedTokens) {
  const auto d = parse("@framed n=4\ndelta(3,4) rho(1,3)^-1 M(2)^2 Mb b1");
  EXPECT_EQ(d.framed.size(), 6u);
  expect_round_trip(d);
  const auto lhs = parse("@framed n=4\ndelta(3,4) delta(2,3) delta(1,2) delta(3,4) delta(2,3) delta(1,2) "
                         "delta(3,4) delta(2,3) delta(1,2) delta(3,4) delta(2,3) delta(1,2)");
  const auto rhs = parse("@framed n=4\nMb M(4)^2 M(3)^2 M(2)^2 M(1)^2");
  EXPECT_TRUE(framed_equal(evaluate(lhs.framed, 4), evaluate(rhs.framed, 4)));
}

TEST(Dsl, GeneratedArtifactsRoundTrip) {
  expect_round_trip(Document::of(phi_factorization(2, 0).word()));
  expect_round_trip(Document::of(phi_factorization(1, 1).word()));
  for (int m = 0; m <= 2; ++m) {
    const auto f = boundary_multitwist_factorization(m);
    const auto d = Document::of(f.word());
    expect_round_trip(d);
    EXPECT_EQ(parse(print(d)).size(), static_cast<std::size_t>(10 * m + 104));
    expect_round_trip(Document::of(*f.skeleton()));
  }
  const auto ext = Document::of(extend_to_genus(12, boundary_multitwist_factorization(0)).word());
  expect_round_trip(ext);
  const auto [t, c] = commutator_relation(2);
  expect_round_trip(Document::of(compose(t, c)));
}

TEST(Dsl, ParsedWordKeepsItsHomology) {
  const auto f = boundary_multitwist_factorization(1);
  const auto back = parse(print(Document::of(f.word())));
  EXPECT_TRUE(homology_action(back.twist).is_identity());
  EXPECT_EQ(homology_action(back.twist), homology_action(f.word()));
}

TEST(Dsl, RandomDocumentsRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    expect_round_trip(Document::of(testing::random_word(rng, n, static_cast<int>(rng() % 30))));
  }
}

TEST(Report, SchemaVersionFirst) {
  Report r("x");
  r.set("a", 3);
  r.set("a", 4);
  EXPECT_EQ(r.render(), "schema_version = 1\nreport = x\na = 4\n");
}

TEST(Report, InvariantKeys) {
  const auto r = invariants_report(fibration_invariants(boundary_multitwist_factorization(0).word()));
  for (const char* key : {"genus", "n_cycles", "euler_closed", "euler_filling", "b1", "torsion",
                          "endo_sigma_num", "endo_sigma_den", "hyperelliptic_verdict"}) {
    EXPECT_NE(r.get(key), nullptr) << key;
  }
  EXPECT_EQ(*r.get("euler_closed"), "64");
  EXPECT_EQ(*r.get("endo_sigma_den"), "23");
}

}  // namespace
}  // namespace posfact
