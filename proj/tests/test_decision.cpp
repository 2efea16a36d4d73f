#include <gtest/gtest.h>

#include <wricc/decision.hpp>

#include "corpus.hpp"

using namespace wricc;

TEST(Decision, RegressionCorpus) {
  for (const auto& c : corpus::regression_corpus()) {
    const auto v = decide_icc(*c.g);
    EXPECT_EQ(v.answer, c.answer) << c.name;
    EXPECT_EQ(v.cond_i, c.cond_i) << c.name;
    EXPECT_EQ(v.cond_ii, c.cond_ii) << c.name;
    EXPECT_EQ(v.cond_iii, c.cond_iii) << c.name;
    EXPECT_FALSE(v.reason.empty());
    EXPECT_FALSE(v.corollary_used);
    EXPECT_EQ(v.q0.has_value(), v.cond_i == Tri::No) << c.name;
  }
}

TEST(Decision, MoreInstances) {
  EXPECT_EQ(decide_icc(*corpus::z2_wr_s3()).answer, Tri::No);
  EXPECT_EQ(decide_icc(*corpus::f2_wr_z3_regular()).answer, Tri::Yes);
  EXPECT_EQ(decide_icc(*corpus::z2_wr_z3_regular()).answer, Tri::No);

  auto s3_mod = decide_icc(*corpus::s3_over_intmod3());
  EXPECT_EQ(s3_mod.answer, Tri::No);
  EXPECT_EQ(s3_mod.cond_i, Tri::No);
  EXPECT_EQ(*s3_mod.q0, GroupElement{std::int64_t{3}});

  // Q = F2 acting trivially: FC(F2) = 1, so condition (i) holds; D = F2 is icc.
  auto f2_triv = make_wreath(make_free(2), make_trivial_qset(make_free(2), 1));
  EXPECT_EQ(decide_icc(*f2_triv).answer, Tri::Yes);
  auto z2_triv = make_wreath(make_cyclic(2), make_trivial_qset(make_free(2), 1));
  EXPECT_EQ(decide_icc(*z2_triv).answer, Tri::No);

  // Infinite D that is not icc, all orbits infinite.
  auto z_wr_z = make_wreath(make_integers(), make_regular(make_integers()));
  EXPECT_EQ(decide_icc(*z_wr_z).answer, Tri::Yes);
}

TEST(Decision, Hypotheses) {
  auto trivial_d = make_wreath(make_cyclic(1), make_regular(make_integers()));
  try {
    decide_icc(*trivial_d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TrivialD);
  }
  auto empty = make_wreath(make_cyclic(2), make_trivial_qset(make_integers(), 0), {});
  try {
    decide_icc(*empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyOmega);
  }
}

TEST(Decision, FreeActionCorollary) {
  auto yes = decide_icc_free(*corpus::f2_wr_z3_regular());
  EXPECT_EQ(yes.answer, Tri::Yes);
  EXPECT_TRUE(yes.corollary_used);
  EXPECT_EQ(decide_icc_free(*corpus::z2_wr_z3_regular()).answer, Tri::No);
  EXPECT_EQ(decide_icc_free(*corpus::lamplighter()).answer, Tri::Yes);
  EXPECT_EQ(decide_icc_free(*corpus::f2_swap()).answer, Tri::Yes);
  try {
    decide_icc_free(*corpus::s3_wr_s3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFreeAction);
  }
  EXPECT_THROW(decide_icc_free(*corpus::z2_mixed()), Error);
}

TEST(Decision, CorollaryAgreesWithCriterion) {
  std::vector<WreathHandle> free_instances{
      corpus::lamplighter(), corpus::f2_swap(), corpus::f2_wr_z3_regular(), corpus::z2_wr_z3_regular(),
      make_wreath(make_symmetric(3), make_regular(make_symmetric(3))),
      make_wreath(make_free(2), make_union({make_regular(make_integers()), make_regular(make_integers())})),
      make_wreath(make_cyclic(5), make_regular(make_free(2)))};
  for (const auto& g : free_instances) {
    auto a = decide_icc(*g);
    auto b = decide_icc_free(*g);
    EXPECT_EQ(a.answer, b.answer) << g->name();
  }
}

TEST(Decision, TriLogic) {
  EXPECT_EQ(Tri::Yes && Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(Tri::No && Tri::Unknown, Tri::No);
  EXPECT_EQ(Tri::Yes || Tri::Unknown, Tri::Yes);
  EXPECT_EQ(Tri::No || Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(!Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(!Tri::Yes, Tri::No);
}
