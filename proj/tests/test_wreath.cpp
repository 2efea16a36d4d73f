#include <gtest/gtest.h>

#include <wricc/sampling.hpp>
#include <wricc/wreath.hpp>

#include "corpus.hpp"

using namespace wricc;
using wricc::corpus::pt;
using wricc::corpus::qpt;

namespace {

GroupElement i64(std::int64_t v) { return GroupElement{v}; }

std::vector<WreathHandle> products() {
  return {corpus::lamplighter(),  corpus::f2_swap(),  corpus::z2_trivial_omega(), corpus::z2_mixed(),
          corpus::f2_mixed(),     corpus::s3_wr_s3(), corpus::z2_wr_s3(),         corpus::s3_over_intmod3(),
          corpus::f2_wr_z3_regular()};
}

}  // namespace

TEST(Wreath, LamplighterExamples) {
  auto g = corpus::lamplighter();
  const WreathElement a{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(1)};
  const auto sq = wr_multiply(*g, a, a);
  EXPECT_EQ(sq, (WreathElement{FinSuppMap{{{qpt(i64(0)), i64(1)}, {qpt(i64(1)), i64(1)}}}, i64(2)}));
  EXPECT_EQ(wr_inverse(*g, a), (WreathElement{FinSuppMap{{{qpt(i64(-1)), i64(1)}}}, i64(-1)}));

  const WreathElement shift{FinSuppMap{}, i64(1)};
  const WreathElement lamp{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(0)};
  EXPECT_EQ(wr_conjugate(*g, shift, lamp),
            (WreathElement{FinSuppMap{{{qpt(i64(0)), i64(1)}, {qpt(i64(1)), i64(1)}}}, i64(1)}));

  EXPECT_EQ(g->format(sq), "{0:1, 1:1}@2");
  EXPECT_EQ(g->parse("{1:1, 0:1}@2"), sq);
  EXPECT_EQ(g->parse("{0:0}@0"), g->identity());
}

TEST(Wreath, LiteralErrors) {
  auto g = corpus::lamplighter();
  for (const char* bad : {"{0:1}", "0:1@0", "{0:1, 0:1}@0", "{0-1}@0", "{0:2}@0", "{x:1}@0"}) {
    EXPECT_THROW(g->parse(bad), Error) << bad;
  }
  try {
    g->parse("{0:1}");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedLiteral);
  }
}

TEST(Wreath, ValidityAndCanonicalForm) {
  auto g = corpus::lamplighter();
  WreathElement bad{FinSuppMap{{{qpt(i64(0)), i64(0)}}}, i64(0)};  // stores an identity value
  EXPECT_FALSE(g->is_valid(bad));
  EXPECT_THROW(wr_inverse(*g, bad), Error);
  WreathElement unsorted{FinSuppMap{{{qpt(i64(2)), i64(1)}, {qpt(i64(1)), i64(1)}}}, i64(0)};
  EXPECT_FALSE(g->is_valid(unsorted));
  WreathElement wrong_point{FinSuppMap{{{pt(0), i64(1)}}}, i64(0)};
  EXPECT_THROW(wr_inverse(*g, wrong_point), Error);
  WreathElement wrong_top{FinSuppMap{}, corpus::perm({0, 1})};
  EXPECT_THROW(wr_inverse(*g, wrong_top), Error);
}

TEST(Wreath, ZetaAndPointwise) {
  auto g = corpus::f2_swap();
  const auto a = corpus::word({1}), b = corpus::word({2});
  auto za = zeta(*g, a, pt(0));
  auto zb = zeta(*g, b, pt(0));
  EXPECT_EQ(pointwise_mul(*g->base(), za, zb), (FinSuppMap{{{pt(0), corpus::word({1, 2})}}}));
  EXPECT_EQ(pointwise_mul(*g->base(), zb, za), (FinSuppMap{{{pt(0), corpus::word({2, 1})}}}));
  EXPECT_EQ(pointwise_mul(*g->base(), za, pointwise_inverse(*g->base(), za)), FinSuppMap{});
  EXPECT_EQ(zeta(*g, corpus::word({}), pt(1)), FinSuppMap{});
  EXPECT_THROW(zeta(*g, a, pt(2)), Error);
  EXPECT_THROW(pointwise_mul(*g->base(), za, FinSuppMap{{{pt(1), i64(1)}}}), Error);
}

TEST(Wreath, LambdaMovesSupport) {
  auto g = corpus::lamplighter();
  FinSuppMap f{{{qpt(i64(0)), i64(1)}, {qpt(i64(3)), i64(1)}}};
  EXPECT_EQ(lambda_act(*g->omega(), i64(2), f), (FinSuppMap{{{qpt(i64(2)), i64(1)}, {qpt(i64(5)), i64(1)}}}));
  // Support transport: Supp(lambda(q) f) = q Supp(f).
  auto s3 = corpus::s3_wr_s3();
  FinSuppMap h{{{pt(0), corpus::perm({1, 0, 2})}}};
  auto moved = lambda_act(*s3->omega(), corpus::perm({1, 2, 0}), h);
  EXPECT_EQ(support(moved), std::vector<OmegaPoint>{pt(1)});
}

TEST(Wreath, GeneratorsFollowWindow) {
  auto g = corpus::z2_mixed();
  const auto gens = g->generators();
  // One D generator per window point (one per union part) then Q's generator.
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens.back(), (WreathElement{FinSuppMap{}, i64(1)}));
  auto custom = make_wreath(make_cyclic(2), make_regular(make_integers()), {qpt(i64(0)), qpt(i64(5))});
  EXPECT_EQ(custom->generators().size(), 3u);
  EXPECT_THROW(make_wreath(make_cyclic(2), make_regular(make_integers()), {pt(0)}), Error);
}

TEST(Wreath, Z2WrS3HasOrder48) {
  auto g = corpus::z2_wr_s3();
  // Close the generating set under multiplication.
  std::set<WreathElement> seen{g->identity()};
  std::vector<WreathElement> frontier{g->identity()};
  while (!frontier.empty()) {
    std::vector<WreathElement> next;
    for (const auto& x : frontier)
      for (const auto& s : g->generators()) {
        auto y = wr_multiply(*g, x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(seen.size(), 48u);
}

// --- properties ------------------------------------------------------------------

TEST(WreathProperty, GroupAxioms) {
  for (const auto& g : products()) {
    ElementSampler sample(*g, 21);
    for (int i = 0; i < 300; ++i) {
      auto x = sample.next(), y = sample.next(), z = sample.next();
      ASSERT_EQ(wr_multiply(*g, wr_multiply(*g, x, y), z), wr_multiply(*g, x, wr_multiply(*g, y, z))) << g->name();
      ASSERT_EQ(wr_multiply(*g, x, g->identity()), x);
      ASSERT_EQ(wr_multiply(*g, g->identity(), x), x);
      ASSERT_TRUE(g->is_identity(wr_multiply(*g, x, wr_inverse(*g, x))));
      ASSERT_TRUE(g->is_identity(wr_multiply(*g, wr_inverse(*g, x), x)));
      ASSERT_TRUE(g->is_valid(wr_multiply(*g, x, y)));
      ASSERT_EQ(wr_conjugate(*g, x, y), wr_multiply(*g, wr_inverse(*g, y), wr_multiply(*g, x, y)));
    }
  }
}

TEST(WreathProperty, LambdaIsAHomomorphism) {
  for (const auto& g : products()) {
    ElementSampler sample(*g, 23);
    const auto& s = *g->omega();
    const auto& d = *g->base();
    const auto& q = *g->top();
    for (int i = 0; i < 200; ++i) {
      auto f = sample.next().phi, h = sample.next().phi;
      auto a = sample.top(), b = sample.top();
      ASSERT_EQ(lambda_act(s, q.mul(a, b), f), lambda_act(s, a, lambda_act(s, b, f))) << g->name();
      ASSERT_EQ(lambda_act(s, q.identity(), f), f);
      ASSERT_EQ(lambda_act(s, a, pointwise_mul(d, f, h)), pointwise_mul(d, lambda_act(s, a, f), lambda_act(s, a, h)));
      ASSERT_EQ(support(lambda_act(s, a, f)).size(), support(f).size());
      for (const auto& y : support(f))
        ASSERT_EQ(map_value(d, lambda_act(s, a, f), act(s, a, y)), map_value(d, f, y));
    }
  }
}

TEST(WreathProperty, SplitExtensionIdentity) {
  // (eps, q^-1)^-1 (f, 1) (eps, q^-1) = (lambda(q) f, 1)
  for (const auto& g : products()) {
    ElementSampler sample(*g, 29);
    const auto& q = *g->top();
    for (int i = 0; i < 200; ++i) {
      auto f = sample.next().phi;
      auto a = sample.top();
      WreathElement lhs = wr_conjugate(*g, WreathElement{f, q.identity()}, WreathElement{FinSuppMap{}, q.inv(a)});
      ASSERT_EQ(lhs, (WreathElement{lambda_act(*g->omega(), a, f), q.identity()})) << g->name();
    }
  }
}

TEST(WreathProperty, LiteralsRoundTrip) {
  for (const auto& g : products()) {
    ElementSampler sample(*g, 31);
    for (int i = 0; i < 100; ++i) {
      auto x = sample.next();
      ASSERT_EQ(g->parse(g->format(x)), x) << g->format(x);
    }
  }
}

TEST(WreathProperty, NonabelianWhenFactorsAre) {
  auto g = corpus::s3_wr_s3();
  ElementSampler sample(*g, 37);
  bool found = false;
  for (int i = 0; i < 100 && !found; ++i) {
    auto x = sample.next(), y = sample.next();
    found = !(wr_multiply(*g, x, y) == wr_multiply(*g, y, x));
  }
  EXPECT_TRUE(found);
}
