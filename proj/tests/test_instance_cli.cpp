#include <gtest/gtest.h>

#include <wricc/commands.hpp>
#include <wricc/instance.hpp>
#include <wricc/sampling.hpp>

#include "corpus.hpp"

using namespace wricc;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::InvalidInstance;
}

std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Instance, ParsesCatalogKinds) {
  auto spec = parse_instance(R"({"name": "m", "D": "free 2", "Q": "integers",
                                 "omega": {"kind": "union", "parts": ["regular", "int-mod 3"]},
                                 "window": ["0/0", "1/0"], "budgets": {"radius": 5, "seed": 7}})");
  EXPECT_EQ(spec.name, "m");
  EXPECT_EQ(spec.window.size(), 2u);
  EXPECT_EQ(spec.budgets.radius, 5u);
  EXPECT_EQ(spec.budgets.seed, 7u);
  EXPECT_EQ(spec.budgets.max_size, 10000u);
  EXPECT_EQ(decide_icc(*spec.product).answer, Tri::Yes);
  EXPECT_EQ(spec.hash.size(), 16u);

  auto prod = parse_instance(R"({"D": {"kind": "direct-product", "factors": ["cyclic 2", "free 2"]},
                                 "Q": {"kind": "symmetric", "n": 3}, "omega": "natural"})");
  EXPECT_EQ(decide_icc(*prod.product).answer, Tri::No);

  auto cay = parse_instance(R"({"D": {"kind": "finite-cayley", "table": [[0,1],[1,0]]},
                                "Q": "cyclic 2", "omega": {"kind": "explicit", "size": 2, "actions": [[1,0]]}})");
  EXPECT_EQ(decide_icc(*cay.product).answer, Tri::No);
}

TEST(Instance, NestedWreathAsBase) {
  auto spec = parse_instance(R"({"D": {"kind": "wreath", "D": "cyclic 2", "Q": "integers", "omega": "regular"},
                                 "Q": "cyclic 2", "omega": "regular"})");
  // The lamplighter is icc, so D icc settles condition (ii).
  auto v = decide_icc(*spec.product);
  EXPECT_EQ(v.cond_ii, Tri::Yes);
  EXPECT_EQ(v.answer, Tri::Yes);
}

TEST(Instance, Diagnostics) {
  EXPECT_EQ(parse_error(R"({"D": "trivial", "Q": "integers", "omega": "regular"})"), ErrorCode::TrivialD);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 1", "Q": "integers", "omega": "regular"})"), ErrorCode::TrivialD);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": {"kind": "wreath", "D": "cyclic 2", "Q": "integers",
                            "omega": "regular"}, "omega": "regular"})"),
            ErrorCode::UnsupportedQKind);
  EXPECT_EQ(parse_error(R"({"D": "quaternion", "Q": "integers", "omega": "regular"})"), ErrorCode::UnknownKind);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": "integers", "omega": "spiral"})"), ErrorCode::UnknownKind);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": "integers", "omega": "trivial 0"})"), ErrorCode::EmptyOmega);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": "integers", "omega": "regular", "window": ["x"]})"),
            ErrorCode::MalformedLiteral);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": "integers"})"), ErrorCode::InvalidInstance);
  EXPECT_EQ(parse_error("not json"), ErrorCode::InvalidInstance);
  EXPECT_EQ(parse_error(R"({"D": "cyclic x", "Q": "integers", "omega": "regular"})"), ErrorCode::InvalidInstance);
  EXPECT_EQ(parse_error(R"({"D": "cyclic 2", "Q": "cyclic 2", "omega": {"kind": "explicit", "size": 3,
                            "actions": [[1,2,0]]}})"),
            ErrorCode::InvalidAction);
  // Messages name the offending field.
  EXPECT_NE(message_of(R"({"D": "cyclic 2", "Q": "integers", "omega": {"kind": "union",
                            "parts": ["regular", "spiral"]}})")
                .find("omega.parts[1]"),
            std::string::npos);
}

TEST(Instance, HashIsStable) {
  const std::string text = R"({"D": "cyclic 2", "Q": "integers", "omega": "regular"})";
  EXPECT_EQ(parse_instance(text).hash, parse_instance(text).hash);
  EXPECT_NE(parse_instance(text).hash,
            parse_instance(R"({"D": "cyclic 3", "Q": "integers", "omega": "regular"})").hash);
}

TEST(InstanceProperty, ElementLiteralsRoundTrip) {
  for (const auto& c : corpus::regression_corpus()) {
    ElementSampler sample(*c.g, 3);
    for (int i = 0; i < 200; ++i) {
      auto x = sample.next();
      ASSERT_EQ(c.g->parse(c.g->format(x)), x) << c.name << " " << c.g->format(x);
    }
  }
}

TEST(Commands, DecideRecords) {
  auto spec = parse_instance(R"({"name": "lamp", "D": "cyclic 2", "Q": "integers", "omega": "regular"})");
  auto r = cmd_decide(spec);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.record.at("command"), "decide");
  EXPECT_EQ(r.record.at("verdict").at("answer"), "Yes");
  EXPECT_TRUE(r.record.contains("corollary"));
  EXPECT_FALSE(render_human(r.record).empty());
}

TEST(Commands, WitnessAndClass) {
  auto spec = parse_instance(R"({"D": "cyclic 2", "Q": "symmetric 3", "omega": "natural"})");
  auto w = cmd_witness(spec, std::nullopt);
  EXPECT_EQ(w.exit_code, kExitOk);
  EXPECT_TRUE(w.record.at("verified").get<bool>());
  EXPECT_EQ(w.record.at("certificate").at("size").get<std::size_t>(), 7u);

  auto c = cmd_class(spec, "{0:1}@[0,1,2]", 8, 10000);
  EXPECT_EQ(c.record.at("report").at("count").get<std::size_t>(), 3u);
  EXPECT_THROW(cmd_class(spec, "{0:1}@[0,1]", 8, 10000), Error);

  auto lamp = parse_instance(R"({"D": "cyclic 2", "Q": "integers", "omega": "regular"})");
  auto lw = cmd_witness(lamp, std::string("{}@1"));
  EXPECT_TRUE(lw.record.at("verified").get<bool>());
}

TEST(Commands, VerifyPassesOnCorpusFiles) {
  for (const char* text : {R"({"D": "cyclic 2", "Q": "symmetric 3", "omega": "natural"})",
                           R"({"D": "symmetric 3", "Q": "integers", "omega": "int-mod 3"})",
                           R"({"D": "free 2", "Q": "cyclic 2", "omega": {"kind": "explicit", "size": 2,
                               "actions": [[1,0]]}, "budgets": {"elements": 5}})"}) {
    auto r = cmd_verify(parse_instance(text), 42, 100);
    EXPECT_EQ(r.exit_code, kExitOk) << r.record.dump(2);
    EXPECT_EQ(r.record.at("result"), "PASS");
  }
}
