#pragma once

// A wreath product used as the base group D of another wreath product.
// FC membership is not available for wreath products, so these may only sit
// in the D position; icc status comes from the criterion and the finite
// invariant set from a non-icc certificate.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decision.hpp"
#include "element.hpp"
#include "group.hpp"
#include "witness.hpp"
#include "wreath.hpp"

namespace wricc {

class NestedWreathGroup final : public Group {
 public:
  explicit NestedWreathGroup(WreathHandle w) : w_(std::move(w)) {}

  const WreathProduct& product() const { return *w_; }
  const WreathHandle& handle() const { return w_; }

  GroupKind kind() const override { return GroupKind::Wreath; }
  std::string name() const override { return "(" + w_->name() + ")"; }
  PayloadKind payload_kind() const override { return PayloadKind::Wreath; }
  GroupElement identity() const override { return wrap(w_->identity()); }
  bool is_valid(const GroupElement& x) const override { return w_->is_valid(x.as_wreath()); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return wrap(detail::wr_mul(*w_, a.as_wreath(), b.as_wreath()));
  }
  GroupElement inv(const GroupElement& a) const override { return wrap(detail::wr_inv(*w_, a.as_wreath())); }
  std::vector<GroupElement> generators() const override {
    std::vector<GroupElement> out;
    for (auto& s : w_->generators()) out.push_back(wrap(std::move(s)));
    if (out.empty()) out.push_back(identity());
    return out;
  }
  bool is_finite() const override {
    if (!w_->top()->is_finite()) return false;
    if (w_->base()->is_trivial()) return true;
    return w_->base()->is_finite() && w_->omega()->size().has_value();
  }
  bool is_trivial() const override {
    const auto n = w_->omega()->size();
    return w_->top()->is_trivial() && (w_->base()->is_trivial() || (n && *n == 0));
  }
  bool fc_member(const GroupElement&) const override {
    fail(ErrorCode::Unsupported, "FC membership is not available for wreath products");
  }
  IccStatus icc_status() const override {
    const auto n = w_->omega()->size();
    if (w_->base()->is_trivial() || (n && *n == 0)) {
      auto s = w_->top()->icc_status();
      s.justification = "degenerate wreath product isomorphic to Q: " + s.justification;
      return s;
    }
    const auto v = decide_icc(*w_);
    return {v.answer, Provenance::TheoremDerived, v.reason};
  }
  std::optional<GroupElement> fc_nontrivial_example() const override { return std::nullopt; }
  std::vector<GroupElement> invariant_set_example() const override {
    const auto v = decide_icc(*w_);
    require(v.answer == Tri::No, ErrorCode::Precondition, name() + " is not known to be non-icc");
    const auto cert = std::get<FiniteClassCertificate>(witness(*w_, v));
    std::vector<GroupElement> out;
    for (const auto& m : cert.members) out.push_back(wrap(m));
    return out;
  }
  GroupElement parse(std::string_view text) const override { return wrap(w_->parse(text)); }
  std::string format(const GroupElement& x) const override { return w_->format(x.as_wreath()); }

 private:
  WreathHandle w_;
};

inline GroupHandle make_nested(WreathHandle w) { return std::make_shared<NestedWreathGroup>(std::move(w)); }

}  // namespace wricc
