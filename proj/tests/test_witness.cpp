#include <gtest/gtest.h>

#include <wricc/decision.hpp>
#include <wricc/sampling.hpp>
#include <wricc/witness.hpp>

#include "corpus.hpp"

using namespace wricc;
using corpus::perm;
using corpus::pt;
using corpus::qpt;
using corpus::word;

namespace {

GroupElement i64(std::int64_t v) { return GroupElement{v}; }

FiniteClassCertificate finite_of(const WreathProduct& g, const std::optional<WreathElement>& x = std::nullopt) {
  auto c = witness(g, decide_icc(g), x);
  EXPECT_TRUE(std::holds_alternative<FiniteClassCertificate>(c));
  return std::get<FiniteClassCertificate>(c);
}

InfiniteFamilyCertificate family_of(const WreathProduct& g, const WreathElement& x) {
  auto c = witness(g, decide_icc(g), x);
  EXPECT_TRUE(std::holds_alternative<InfiniteFamilyCertificate>(c));
  return std::get<InfiniteFamilyCertificate>(c);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInstance;
}

}  // namespace

// --- finite certificates -------------------------------------------------------

TEST(WitnessFinite, Z2OverNaturalS3HasSeven) {
  auto g = corpus::z2_wr_s3();
  auto c = finite_of(*g);
  EXPECT_EQ(c.provenance, FiniteProvenance::FiniteOrbit);
  EXPECT_EQ(c.members.size(), 7u);
  EXPECT_EQ(c.predicted_size, 7u);
  for (const auto& m : c.members) EXPECT_TRUE(g->top()->is_identity(m.q));
  EXPECT_TRUE(verify_finite_closure(*g, c));
  EXPECT_TRUE(verify_finite_certificate(*g, c, 3, 500, 42));
}

TEST(WitnessFinite, S3OverOnePointHasThree) {
  // Q = F2 acting trivially: FC(F2) = 1 so the finite-orbit branch applies.
  auto g = make_wreath(make_symmetric(3), make_trivial_qset(make_free(2), 1));
  auto c = finite_of(*g);
  EXPECT_EQ(c.provenance, FiniteProvenance::FiniteOrbit);
  EXPECT_EQ(c.members.size(), 3u);
  EXPECT_TRUE(verify_finite_closure(*g, c));
}

TEST(WitnessFinite, ConditionIOverIntMod3HasOne) {
  auto g = corpus::s3_over_intmod3();
  auto c = finite_of(*g);
  EXPECT_EQ(c.provenance, FiniteProvenance::ConditionI);
  ASSERT_EQ(c.members.size(), 1u);
  EXPECT_EQ(c.members.front(), (WreathElement{FinSuppMap{}, i64(3)}));
  EXPECT_TRUE(verify_finite_certificate(*g, c, 3, 500, 42));
}

TEST(WitnessFinite, ConditionIWithThreeCycleHasTwo) {
  auto g = make_wreath(make_cyclic(2), make_trivial_qset(make_symmetric(3), 1));
  auto c = cert_condition_i(*g, perm({1, 2, 0}));
  EXPECT_EQ(c.members.size(), 2u);
  EXPECT_TRUE(verify_finite_closure(*g, c));
  EXPECT_EQ(code_of([&] { cert_condition_i(*g, perm({0, 1, 2})); }), ErrorCode::Precondition);
  auto moving = corpus::s3_wr_s3();
  EXPECT_EQ(code_of([&] { cert_condition_i(*moving, perm({1, 2, 0})); }), ErrorCode::Precondition);
}

TEST(WitnessFinite, TrivialOmegaOverZ) {
  auto g = corpus::z2_trivial_omega();
  auto c = finite_of(*g);
  EXPECT_EQ(c.provenance, FiniteProvenance::ConditionI);
  EXPECT_EQ(c.members, std::vector<WreathElement>{(WreathElement{FinSuppMap{}, i64(1)})});
  EXPECT_TRUE(verify_finite_certificate(*g, c, 3, 500, 42));
}

TEST(WitnessFinite, MixedCarrierUsesTheFiniteOrbit) {
  auto g = corpus::z2_mixed();
  auto c = finite_of(*g);
  EXPECT_EQ(c.provenance, FiniteProvenance::FiniteOrbit);
  EXPECT_EQ(c.members.size(), 7u);
  for (const auto& m : c.members)
    for (const auto& y : support(m.phi)) EXPECT_EQ(y.part, 1u);
  EXPECT_TRUE(verify_finite_certificate(*g, c, 3, 500, 42));
}

TEST(WitnessFinite, SlabCoversFiniteGroup) {
  auto g = corpus::z2_wr_s3();
  auto c = cert_finite_slab(*g, perm({1, 0, 2}));
  EXPECT_EQ(c.members.size(), 8u * 3u);
  EXPECT_TRUE(verify_finite_closure(*g, c));
  auto id = cert_finite_slab(*g, perm({0, 1, 2}));
  EXPECT_EQ(id.members.size(), 7u);
  EXPECT_THROW(cert_finite_slab(*corpus::lamplighter(), i64(0)), Error);
}

TEST(WitnessFinite, NegativeControlIsRejected) {
  // Dropping one member breaks invariance.
  auto g = corpus::z2_wr_s3();
  auto c = finite_of(*g);
  c.members.erase(c.members.begin() + 1);
  EXPECT_FALSE(verify_finite_closure(*g, c));
  auto r = verify_finite_certificate(*g, c, 3, 500, 42);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.image.has_value());
  EXPECT_FALSE(c.contains(*r.image));

  auto with_identity = finite_of(*g);
  with_identity.members.push_back(g->identity());
  std::sort(with_identity.members.begin(), with_identity.members.end());
  EXPECT_FALSE(verify_finite_certificate(*g, with_identity, 3, 10, 1).ok);
}

// --- infinite families -----------------------------------------------------------

TEST(WitnessFamily, QTranslationInF2) {
  auto g = make_wreath(make_cyclic(2), make_regular(make_free(2)));
  WreathElement x{FinSuppMap{}, word({1})};
  auto c = family_of(*g, x);
  EXPECT_EQ(c.kind, FamilyKind::QTranslation);
  EXPECT_TRUE(verify_infinite_certificate(*g, c, 50));
}

TEST(WitnessFamily, LambdaTranslationInLamplighter) {
  auto g = corpus::lamplighter();
  WreathElement x{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(0)};
  auto c = family_of(*g, x);
  EXPECT_EQ(c.kind, FamilyKind::LambdaTranslation);
  auto members = family_prefix(*g, c, 5);
  ASSERT_EQ(members.size(), 5u);
  // Translates of a single lamp, in ball order 0, -1, 1, -2, 2.
  EXPECT_EQ(members[1].conjugate, (WreathElement{FinSuppMap{{{qpt(i64(1)), i64(1)}}}, i64(0)}));
  EXPECT_TRUE(verify_family_members(*g, x, members));
  EXPECT_TRUE(verify_infinite_certificate(*g, c, 100));
}

TEST(WitnessFamily, SeededTranslationForPureShift) {
  auto g = corpus::lamplighter();
  WreathElement x{FinSuppMap{}, i64(1)};
  auto c = family_of(*g, x);
  EXPECT_EQ(c.kind, FamilyKind::LambdaTranslation);
  ASSERT_TRUE(c.seed_value.has_value());
  auto members = family_prefix(*g, c, 4);
  // g' = (zeta^0 zeta^1, 1) shifted by k.
  EXPECT_EQ(members[0].conjugate,
            (WreathElement{FinSuppMap{{{qpt(i64(0)), i64(1)}, {qpt(i64(1)), i64(1)}}}, i64(1)}));
  EXPECT_TRUE(verify_infinite_certificate(*g, c, 100));
}

TEST(WitnessFamily, GdClosedFormsMatchConjugation) {
  auto g = corpus::f2_swap();
  const auto a = word({1}), b = word({2});
  // y outside Supp(phi)
  WreathElement x1{FinSuppMap{{{pt(1), a}}}, i64(1)};
  // phi = phi0 zeta_c^y
  WreathElement x2{FinSuppMap{{{pt(0), b}, {pt(1), a}}}, i64(1)};
  for (const auto& x : {x1, x2}) {
    for (const auto& d : ball_prefix(g->base(), 40)) {
      WreathElement h{g->base()->is_identity(d) ? FinSuppMap{} : FinSuppMap{{{pt(0), d}}}, i64(0)};
      ASSERT_EQ(detail::gd_closed_form(*g, x, d, pt(0)), wr_conjugate(*g, x, h));
    }
  }
  // Explicit values: y = 0, q y = 1, d = a.
  EXPECT_EQ(detail::gd_closed_form(*g, x1, a, pt(0)),
            (WreathElement{FinSuppMap{{{pt(0), word({-1})}, {pt(1), word({1, 1})}}}, i64(1)}));
  EXPECT_EQ(detail::gd_closed_form(*g, x2, a, pt(0)),
            (WreathElement{FinSuppMap{{{pt(0), word({-1, 2})}, {pt(1), word({1, 1})}}}, i64(1)}));

  auto c = family_of(*g, x1);
  EXPECT_EQ(c.kind, FamilyKind::Gd);
  EXPECT_TRUE(verify_infinite_certificate(*g, c, 100));
  EXPECT_EQ(code_of([&] { family_gd(*g, WreathElement{FinSuppMap{{{pt(0), a}}}, i64(0)}, pt(0)); }),
            ErrorCode::Precondition);
}

TEST(WitnessFamily, ValueConjugationStaysInSmallBall) {
  auto g = corpus::f2_swap();
  WreathElement x{FinSuppMap{{{pt(0), word({1})}}}, i64(0)};
  auto c = family_of(*g, x);
  EXPECT_EQ(c.kind, FamilyKind::ValueConjugation);
  auto members = family_prefix(*g, c, 20);
  ASSERT_EQ(members.size(), 20u);
  for (const auto& m : members) {
    const auto& e = m.conjugator.phi.empty() ? g->base()->identity() : m.conjugator.phi.entries.front().second;
    EXPECT_LE(e.as_word().letters.size(), 4u);
  }
  EXPECT_TRUE(verify_family_members(*g, x, members));
}

TEST(WitnessFamily, MixedCarrierFamilies) {
  auto g = corpus::f2_mixed();
  ElementSampler sample(*g, 42);
  for (int i = 0; i < 20; ++i) {
    auto x = sample.next_nontrivial();
    auto c = family_of(*g, x);
    EXPECT_TRUE(verify_infinite_certificate(*g, c, 30)) << g->format(x);
  }
}

TEST(WitnessFamily, NegativeControls) {
  auto g = corpus::lamplighter();
  WreathElement x{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(0)};
  auto c = family_of(*g, x);
  auto members = family_prefix(*g, c, 5);
  // Duplicate a member.
  auto dup = members;
  dup[2] = dup[1];
  EXPECT_FALSE(verify_family_members(*g, x, dup).ok);
  // Corrupt a conjugate.
  auto bad = members;
  bad[3].conjugate = x;
  EXPECT_FALSE(verify_family_members(*g, x, bad).ok);

  // A family over a finite Q exhausts.
  auto z2 = corpus::z2_wr_z3_regular();
  WreathElement y{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(0)};
  InfiniteFamilyCertificate fake{y, FamilyKind::LambdaTranslation, true, std::nullopt, std::nullopt};
  EXPECT_FALSE(verify_infinite_certificate(*z2, fake, 10).ok);
  EXPECT_THROW(verify_infinite_certificate(*g, c, 1), Error);
}

TEST(WitnessFamily, StreamsRestart) {
  auto g = corpus::lamplighter();
  WreathElement x{FinSuppMap{{{qpt(i64(0)), i64(1)}}}, i64(2)};
  auto c = family_of(*g, x);
  auto a = family_prefix(*g, c, 10);
  auto b = family_prefix(*g, c, 10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].conjugate, b[i].conjugate);
}

TEST(WitnessDispatch, ErrorPaths) {
  auto g = corpus::lamplighter();
  auto v = decide_icc(*g);
  EXPECT_EQ(code_of([&] { witness(*g, v); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([&] { witness(*g, v, g->identity()); }), ErrorCode::Precondition);
  IccVerdict unknown;
  EXPECT_EQ(code_of([&] { witness(*g, unknown, g->identity()); }), ErrorCode::UnknownVerdict);
  EXPECT_EQ(code_of([&] { family_q_translation(*g, WreathElement{FinSuppMap{}, i64(1)}); }),
            ErrorCode::Precondition);
  auto f2 = corpus::f2_swap();
  EXPECT_EQ(code_of([&] { family_value_conjugation(*f2, WreathElement{FinSuppMap{{{pt(0), word({1})}}}, i64(0)}, pt(1)); }),
            ErrorCode::Precondition);
}
