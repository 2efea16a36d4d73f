#pragma once

// Exact arithmetic in the restricted wreath product G = D wr_Omega Q, the
// split extension of the finitely supported maps D^(Omega) by Q acting through
//   lambda(q)(phi)(x) = phi(q^-1 x),
// so that (f1, q1)(f2, q2) = (f1 * lambda(q1)(f2), q1 q2).

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "group.hpp"
#include "literal.hpp"
#include "qset.hpp"

namespace wricc {

namespace detail {

inline void canonicalize(const Group& d, FinSuppMap& f) {
  std::sort(f.entries.begin(), f.entries.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  const GroupElement id = d.identity();
  std::erase_if(f.entries, [&](const auto& e) { return e.second == id; });
}

inline FinSuppMap map_mul(const Group& d, const FinSuppMap& f, const FinSuppMap& g) {
  FinSuppMap out;
  out.entries.reserve(f.size() + g.size());
  auto i = f.entries.begin();
  auto j = g.entries.begin();
  while (i != f.entries.end() || j != g.entries.end()) {
    if (j == g.entries.end() || (i != f.entries.end() && compare(i->first, j->first) < 0)) {
      out.entries.push_back(*i++);
    } else if (i == f.entries.end() || compare(j->first, i->first) < 0) {
      out.entries.push_back(*j++);
    } else {
      // Shared key: left value times right value.
      GroupElement v = d.mul(i->second, j->second);
      if (!d.is_identity(v)) out.entries.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline FinSuppMap map_inv(const Group& d, const FinSuppMap& f) {
  FinSuppMap out;
  out.entries.reserve(f.size());
  for (const auto& [x, v] : f.entries) out.entries.emplace_back(x, d.inv(v));
  return out;
}

inline FinSuppMap map_translate(const QSet& s, const GroupElement& q, const FinSuppMap& f) {
  FinSuppMap out;
  out.entries.reserve(f.size());
  for (const auto& [x, v] : f.entries) out.entries.emplace_back(s.apply(q, x), v);
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return out;
}

}  // namespace detail

// Value of f at x (the identity of D off the support).
inline GroupElement map_value(const Group& d, const FinSuppMap& f, const OmegaPoint& x) {
  auto it = std::lower_bound(f.entries.begin(), f.entries.end(), x,
                             [](const auto& e, const OmegaPoint& key) { return compare(e.first, key) < 0; });
  if (it != f.entries.end() && it->first == x) return it->second;
  return d.identity();
}

// Copy of f with the value at x replaced.
inline FinSuppMap map_with(const Group& d, FinSuppMap f, const OmegaPoint& x, GroupElement v) {
  std::erase_if(f.entries, [&](const auto& e) { return e.first == x; });
  if (!d.is_identity(v)) f.entries.emplace_back(x, std::move(v));
  detail::canonicalize(d, f);
  return f;
}

inline std::vector<OmegaPoint> support(const FinSuppMap& f) {
  std::vector<OmegaPoint> out;
  out.reserve(f.size());
  for (const auto& e : f.entries) out.push_back(e.first);
  return out;
}

inline bool is_canonical(const Group& d, const FinSuppMap& f) {
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (d.is_identity(f.entries[i].second)) return false;
    if (i > 0 && compare(f.entries[i - 1].first, f.entries[i].first) >= 0) return false;
  }
  return true;
}

class WreathProduct {
 public:
  // An empty window selects the carrier's default (one orbit seed per part).
  WreathProduct(GroupHandle d, QSetHandle omega, std::vector<OmegaPoint> window = {})
      : d_(std::move(d)), omega_(std::move(omega)), window_(std::move(window)) {
    require(d_ != nullptr && omega_ != nullptr, ErrorCode::InvalidInstance, "wreath product needs D and Omega");
    if (window_.empty()) window_ = omega_->default_window();
    for (const auto& w : window_) check_point(*omega_, w);
  }

  const GroupHandle& base() const { return d_; }
  const GroupHandle& top() const { return omega_->acting(); }
  const QSetHandle& omega() const { return omega_; }
  const std::vector<OmegaPoint>& window() const { return window_; }

  std::string name() const { return d_->name() + " wr " + omega_->name(); }

  WreathElement identity() const { return {FinSuppMap{}, top()->identity()}; }

  bool is_identity(const WreathElement& g) const { return g.phi.empty() && top()->is_identity(g.q); }

  bool is_valid(const WreathElement& g) const {
    if (g.q.kind() != top()->payload_kind() || !top()->is_valid(g.q)) return false;
    for (const auto& [x, v] : g.phi.entries) {
      if (!omega_->is_valid(x)) return false;
      if (v.kind() != d_->payload_kind() || !d_->is_valid(v)) return false;
    }
    return is_canonical(*d_, g.phi);
  }

  // {(zeta_d^y, 1) : d in gen(D), y in W} then {(eps, s) : s in gen(Q)}.
  std::vector<WreathElement> generators() const {
    std::vector<WreathElement> out;
    for (const auto& y : window_) {
      for (const auto& d : d_->generators()) {
        if (d_->is_identity(d)) continue;
        out.push_back({FinSuppMap{{{y, d}}}, top()->identity()});
      }
    }
    for (const auto& s : top()->generators()) out.push_back({FinSuppMap{}, s});
    return out;
  }

  // Literal `{y1:d1, y2:d2}@q`; epsilon is `{}`.
  WreathElement parse(std::string_view text) const {
    text = literal::trim(text);
    auto at = literal::rfind_top(text, '@');
    if (!at) fail(ErrorCode::MalformedLiteral, "wreath literal needs '{..}@q', got '" + std::string(text) + "'");
    auto body = literal::unwrap(text.substr(0, *at), '{', '}');
    if (!body) fail(ErrorCode::MalformedLiteral, "wreath map must be braced in '" + std::string(text) + "'");
    WreathElement g;
    g.q = top()->parse(text.substr(*at + 1));
    if (!body->empty()) {
      for (auto entry : literal::split_top(*body, ',')) {
        auto colon = literal::find_top(entry, ':');
        if (!colon) fail(ErrorCode::MalformedLiteral, "map entry needs 'point:value', got '" + std::string(entry) + "'");
        OmegaPoint x = omega_->parse_point(entry.substr(0, *colon));
        GroupElement v = d_->parse(entry.substr(*colon + 1));
        for (const auto& e : g.phi.entries)
          require(!(e.first == x), ErrorCode::MalformedLiteral, "duplicate point in '" + std::string(text) + "'");
        g.phi.entries.emplace_back(std::move(x), std::move(v));
      }
    }
    detail::canonicalize(*d_, g.phi);
    return g;
  }

  std::string format_map(const FinSuppMap& f) const {
    std::string s = "{";
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      if (i) s += ", ";
      s += omega_->format_point(f.entries[i].first) + ":" + d_->format(f.entries[i].second);
    }
    return s + "}";
  }

  std::string format(const WreathElement& g) const { return format_map(g.phi) + "@" + top()->format(g.q); }

 private:
  GroupHandle d_;
  QSetHandle omega_;
  std::vector<OmegaPoint> window_;
};

using WreathHandle = std::shared_ptr<const WreathProduct>;

inline WreathHandle make_wreath(GroupHandle d, QSetHandle omega, std::vector<OmegaPoint> window = {}) {
  return std::make_shared<WreathProduct>(std::move(d), std::move(omega), std::move(window));
}

inline void check_element(const WreathProduct& g, const WreathElement& x) {
  if (!g.is_valid(x)) fail(ErrorCode::KindMismatch, "element does not belong to " + g.name());
}

// --- D^(Omega) ---------------------------------------------------------------

// zeta_d^y: y -> d, everything else -> 1.
inline FinSuppMap zeta(const WreathProduct& g, const GroupElement& d, const OmegaPoint& y) {
  check_element(*g.base(), d);
  check_point(*g.omega(), y);
  if (g.base()->is_identity(d)) return {};
  return FinSuppMap{{{y, d}}};
}

inline FinSuppMap pointwise_mul(const Group& d, const FinSuppMap& f, const FinSuppMap& g) {
  for (const auto* m : {&f, &g})
    for (const auto& e : m->entries)
      if (e.second.kind() != d.payload_kind() || !d.is_valid(e.second))
        fail(ErrorCode::KindMismatch, "map value does not belong to " + d.name());
  return detail::map_mul(d, f, g);
}

inline FinSuppMap pointwise_inverse(const Group& d, const FinSuppMap& f) { return detail::map_inv(d, f); }

// lambda(q)(f): each support point y moves to q.y with its value.
inline FinSuppMap lambda_act(const QSet& s, const GroupElement& q, const FinSuppMap& f) {
  check_element(*s.acting(), q);
  for (const auto& e : f.entries) check_point(s, e.first);
  return detail::map_translate(s, q, f);
}

// --- G -------------------------------------------------------------------------

namespace detail {

inline WreathElement wr_mul(const WreathProduct& g, const WreathElement& a, const WreathElement& b) {
  return {map_mul(*g.base(), a.phi, map_translate(*g.omega(), a.q, b.phi)), g.top()->mul(a.q, b.q)};
}

inline WreathElement wr_inv(const WreathProduct& g, const WreathElement& a) {
  GroupElement qi = g.top()->inv(a.q);
  return {map_translate(*g.omega(), qi, map_inv(*g.base(), a.phi)), std::move(qi)};
}

inline WreathElement wr_conj(const WreathProduct& g, const WreathElement& x, const WreathElement& h) {
  return wr_mul(g, wr_mul(g, wr_inv(g, h), x), h);
}

}  // namespace detail

inline WreathElement wr_multiply(const WreathProduct& g, const WreathElement& a, const WreathElement& b) {
  check_element(g, a);
  check_element(g, b);
  return detail::wr_mul(g, a, b);
}

// (f, q)^-1 = (lambda(q^-1)(f^-1), q^-1)
inline WreathElement wr_inverse(const WreathProduct& g, const WreathElement& a) {
  check_element(g, a);
  return detail::wr_inv(g, a);
}

// h^-1 x h
inline WreathElement wr_conjugate(const WreathProduct& g, const WreathElement& x, const WreathElement& h) {
  check_element(g, x);
  check_element(g, h);
  return detail::wr_conj(g, x, h);
}

}  // namespace wricc
