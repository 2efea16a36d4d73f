#pragma once

// Base-group catalog usable as D or Q: element arithmetic plus the property
// oracles the icc criterion consumes. FC membership and icc status are
// declared per kind (with a one-line justification) rather than computed from
// presentations.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "literal.hpp"
#include "tristate.hpp"

namespace wricc {

enum class GroupKind { FiniteCayley, Cyclic, Symmetric, Integers, Free, DirectProduct, Wreath };

enum class Provenance { Computed, Declared, TheoremDerived };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Declared: return "declared";
    default: return "theorem-derived";
  }
}

struct IccStatus {
  Tri answer = Tri::Unknown;
  Provenance provenance = Provenance::Declared;
  std::string justification;
};

class Group {
 public:
  virtual ~Group() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual PayloadKind payload_kind() const = 0;

  virtual GroupElement identity() const = 0;
  // Payload already has the right kind; checks the per-kind invariants.
  virtual bool is_valid(const GroupElement& x) const = 0;
  // Unchecked arithmetic on valid payloads; use the free functions below.
  virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inv(const GroupElement& a) const = 0;

  // Nonempty; the trivial group lists its identity.
  virtual std::vector<GroupElement> generators() const = 0;

  virtual bool is_finite() const = 0;
  virtual bool is_trivial() const = 0;
  // Throws Unsupported for kinds without an FC rule.
  virtual bool fc_member(const GroupElement& x) const = 0;
  virtual IccStatus icc_status() const = 0;
  // Some element != 1 of FC(G), if FC(G) is nontrivial.
  virtual std::optional<GroupElement> fc_nontrivial_example() const = 0;
  // Nonempty finite conjugation-invariant set of nontrivial elements.
  virtual std::vector<GroupElement> invariant_set_example() const = 0;

  virtual GroupElement parse(std::string_view text) const = 0;
  virtual std::string format(const GroupElement& x) const = 0;

  bool is_identity(const GroupElement& x) const { return x == identity(); }
};

using GroupHandle = std::shared_ptr<const Group>;

// --- checked operations ----------------------------------------------------

inline void check_element(const Group& g, const GroupElement& x) {
  if (x.kind() != g.payload_kind())
    fail(ErrorCode::KindMismatch, "element payload does not belong to " + g.name());
  if (!g.is_valid(x)) fail(ErrorCode::InvalidElement, "invalid payload for " + g.name());
}

inline GroupElement multiply(const Group& g, const GroupElement& a, const GroupElement& b) {
  check_element(g, a);
  check_element(g, b);
  return g.mul(a, b);
}

inline GroupElement inverse(const Group& g, const GroupElement& a) {
  check_element(g, a);
  return g.inv(a);
}

// x^y = y^-1 x y
inline GroupElement conjugate(const Group& g, const GroupElement& x, const GroupElement& y) {
  check_element(g, x);
  check_element(g, y);
  return g.mul(g.mul(g.inv(y), x), y);
}

inline bool fc_contains(const Group& g, const GroupElement& x) {
  check_element(g, x);
  return g.fc_member(x);
}

inline std::vector<GroupElement> generators_and_inverses(const Group& g) {
  std::vector<GroupElement> out;
  for (const auto& s : g.generators()) {
    out.push_back(s);
    out.push_back(g.inv(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- generator-ball enumeration ----------------------------------------------

// Elements of G in order of word length over generators and inverses, ties
// broken by the canonical payload order. Finite groups end; infinite ones
// stream forever. Fresh streams restart from the identity.
class ElementStream {
 public:
  explicit ElementStream(GroupHandle g) : group_(std::move(g)), steps_(generators_and_inverses(*group_)) {
    layer_.push_back(group_->identity());
    seen_.insert(layer_.front());
  }

  std::optional<GroupElement> next() {
    while (pos_ >= layer_.size()) {
      if (!advance()) return std::nullopt;
    }
    ++produced_;
    return layer_[pos_++];
  }

  // Word length of the element most recently returned.
  std::size_t depth() const { return depth_; }
  std::size_t produced() const { return produced_; }

 private:
  bool advance() {
    std::vector<GroupElement> fresh;
    for (const auto& x : layer_) {
      for (const auto& s : steps_) {
        GroupElement y = group_->mul(x, s);
        if (seen_.insert(y).second) fresh.push_back(std::move(y));
      }
    }
    if (fresh.empty()) return false;
    std::sort(fresh.begin(), fresh.end());
    layer_ = std::move(fresh);
    pos_ = 0;
    ++depth_;
    return true;
  }

  GroupHandle group_;
  std::vector<GroupElement> steps_;
  std::vector<GroupElement> layer_;
  std::unordered_set<GroupElement, Hash> seen_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::size_t produced_ = 0;
};

// All elements of a group known to be finite, in canonical payload order.
inline std::vector<GroupElement> all_elements(const GroupHandle& g, std::size_t limit = 1'000'000) {
  require(g->is_finite(), ErrorCode::Precondition, g->name() + " is not finite");
  ElementStream stream(g);
  std::vector<GroupElement> out;
  while (auto x = stream.next()) {
    out.push_back(std::move(*x));
    require(out.size() <= limit, ErrorCode::CertificateBudget, "element enumeration exceeded limit");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First `count` elements of the generator ball (fewer if G is smaller).
inline std::vector<GroupElement> ball_prefix(const GroupHandle& g, std::size_t count) {
  ElementStream stream(g);
  std::vector<GroupElement> out;
  while (out.size() < count) {
    auto x = stream.next();
    if (!x) break;
    out.push_back(std::move(*x));
  }
  return out;
}

// --- bounded conjugacy-class enumeration -----------------------------------

enum class ClassStatus { ExactFinite, AtLeast, BudgetExhausted };

constexpr std::string_view to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::ExactFinite: return "ExactFinite";
    case ClassStatus::AtLeast: return "AtLeast";
    default: return "BudgetExhausted";
  }
}

struct ClassReport {
  ClassStatus status = ClassStatus::BudgetExhausted;
  std::vector<GroupElement> elements;  // sorted
  std::size_t lower_bound = 0;
  std::size_t radius_used = 0;
  // ExactFinite on an infinite group proves invariance under the listed
  // generators (hence the subgroup they generate) only.
  bool generator_caveat = false;

  std::size_t size() const { return elements.size(); }
};

// Closure of {x} under conjugation by generators and their inverses, one
// round per unit of radius. AtLeast when `max_size` conjugates were found,
// BudgetExhausted when the rounds ran out first.
inline ClassReport class_enum_bounded(const GroupHandle& g, const GroupElement& x, std::size_t radius,
                                      std::size_t max_size) {
  require(radius > 0 && max_size > 0, ErrorCode::ZeroBudget, "class enumeration budgets must be positive");
  check_element(*g, x);
  const auto steps = generators_and_inverses(*g);

  ClassReport report;
  report.generator_caveat = !g->is_finite();
  std::unordered_set<GroupElement, Hash> seen{x};
  std::vector<GroupElement> frontier{x};
  std::size_t round = 0;
  bool capped = false;
  while (!frontier.empty() && round < radius && !capped) {
    ++round;
    std::vector<GroupElement> next;
    for (const auto& y : frontier) {
      for (const auto& s : steps) {
        GroupElement z = g->mul(g->mul(g->inv(s), y), s);
        if (seen.insert(z).second) {
          next.push_back(std::move(z));
          if (seen.size() >= max_size) {
            capped = true;
            break;
          }
        }
      }
      if (capped) break;
    }
    frontier = std::move(next);
  }
  report.radius_used = round;
  report.elements.assign(seen.begin(), seen.end());
  std::sort(report.elements.begin(), report.elements.end());
  report.lower_bound = report.elements.size();
  if (capped) {
    report.status = ClassStatus::AtLeast;
  } else if (frontier.empty()) {
    report.status = ClassStatus::ExactFinite;
  } else {
    report.status = ClassStatus::BudgetExhausted;
  }
  return report;
}

inline std::vector<GroupElement> finite_invariant_set_example(const GroupHandle& g) {
  require(!g->is_trivial(), ErrorCode::Precondition, g->name() + " is trivial");
  require(g->icc_status().answer != Tri::Yes, ErrorCode::Precondition, g->name() + " is icc");
  return g->invariant_set_example();
}

namespace detail {

inline std::vector<GroupElement> finite_class_of_first_nonidentity(const GroupHandle& g) {
  const auto elems = all_elements(g);
  const GroupElement id = g->identity();
  for (const auto& e : elems) {
    if (e == id) continue;
    auto report = class_enum_bounded(g, e, elems.size() + 1, elems.size() + 1);
    return report.elements;
  }
  fail(ErrorCode::Precondition, g->name() + " is trivial");
}

inline IccStatus finite_icc(const Group& g) {
  return {Tri::No, Provenance::Computed,
          g.is_trivial() ? "trivial group" : "finite group: every conjugacy class is finite"};
}

}  // namespace detail

// --- catalog kinds -----------------------------------------------------------

class IntegerGroup final : public Group {
 public:
  GroupKind kind() const override { return GroupKind::Integers; }
  std::string name() const override { return "integers"; }
  PayloadKind payload_kind() const override { return PayloadKind::Integer; }
  GroupElement identity() const override { return std::int64_t{0}; }
  bool is_valid(const GroupElement&) const override { return true; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override { return a.as_int() + b.as_int(); }
  GroupElement inv(const GroupElement& a) const override { return -a.as_int(); }
  std::vector<GroupElement> generators() const override { return {std::int64_t{1}}; }
  bool is_finite() const override { return false; }
  bool is_trivial() const override { return false; }
  bool fc_member(const GroupElement&) const override { return true; }
  IccStatus icc_status() const override {
    return {Tri::No, Provenance::Declared, "abelian: every conjugacy class is a singleton"};
  }
  std::optional<GroupElement> fc_nontrivial_example() const override { return GroupElement{std::int64_t{1}}; }
  std::vector<GroupElement> invariant_set_example() const override { return {std::int64_t{1}}; }
  GroupElement parse(std::string_view text) const override { return literal::parse_int(text); }
  std::string format(const GroupElement& x) const override { return std::to_string(x.as_int()); }
};

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(std::int64_t n) : n_(n) {
    require(n >= 1, ErrorCode::InvalidInstance, "cyclic order must be >= 1");
  }
  std::int64_t order() const { return n_; }

  GroupKind kind() const override { return GroupKind::Cyclic; }
  std::string name() const override { return "cyclic " + std::to_string(n_); }
  PayloadKind payload_kind() const override { return PayloadKind::Integer; }
  GroupElement identity() const override { return std::int64_t{0}; }
  bool is_valid(const GroupElement& x) const override { return x.as_int() >= 0 && x.as_int() < n_; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return (a.as_int() + b.as_int()) % n_;
  }
  GroupElement inv(const GroupElement& a) const override { return (n_ - a.as_int()) % n_; }
  std::vector<GroupElement> generators() const override { return {std::int64_t{n_ > 1 ? 1 : 0}}; }
  bool is_finite() const override { return true; }
  bool is_trivial() const override { return n_ == 1; }
  bool fc_member(const GroupElement&) const override { return true; }
  IccStatus icc_status() const override { return detail::finite_icc(*this); }
  std::optional<GroupElement> fc_nontrivial_example() const override {
    if (n_ == 1) return std::nullopt;
    return GroupElement{std::int64_t{1}};
  }
  std::vector<GroupElement> invariant_set_example() const override { return {std::int64_t{1}}; }
  GroupElement parse(std::string_view text) const override {
    const auto v = literal::parse_int(text);
    require(v >= 0 && v < n_, ErrorCode::MalformedLiteral,
            "residue " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
    return v;
  }
  std::string format(const GroupElement& x) const override { return std::to_string(x.as_int()); }

 private:
  std::int64_t n_;
};

namespace detail {

inline Perm compose(const Perm& a, const Perm& b) {
  Perm out;
  out.images.resize(a.images.size());
  for (std::size_t i = 0; i < b.images.size(); ++i) out.images[i] = a.images[static_cast<std::size_t>(b.images[i])];
  return out;
}

inline Perm invert(const Perm& a) {
  Perm out;
  out.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) out.images[static_cast<std::size_t>(a.images[i])] = static_cast<int>(i);
  return out;
}

inline Perm identity_perm(std::size_t n) {
  Perm p;
  for (std::size_t i = 0; i < n; ++i) p.images.push_back(static_cast<int>(i));
  return p;
}

inline bool is_bijection(const std::vector<int>& images, std::size_t n) {
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

inline std::vector<int> parse_int_list(std::string_view text) {
  auto body = literal::unwrap(text, '[', ']');
  if (!body) fail(ErrorCode::MalformedLiteral, "expected [..] list, got '" + std::string(text) + "'");
  std::vector<int> out;
  if (body->empty()) return out;
  for (auto part : literal::split_top(*body, ',')) out.push_back(static_cast<int>(literal::parse_int(part)));
  return out;
}

inline std::string format_int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace detail

// Permutations compose right to left: (a*b)(x) = a(b(x)).
class SymmetricGroup final : public Group {
 public:
  explicit SymmetricGroup(std::size_t n) : n_(n) {
    require(n >= 1, ErrorCode::InvalidInstance, "symmetric degree must be >= 1");
  }
  std::size_t degree() const { return n_; }

  GroupKind kind() const override { return GroupKind::Symmetric; }
  std::string name() const override { return "symmetric " + std::to_string(n_); }
  PayloadKind payload_kind() const override { return PayloadKind::Permutation; }
  GroupElement identity() const override { return detail::identity_perm(n_); }
  bool is_valid(const GroupElement& x) const override { return detail::is_bijection(x.as_perm().images, n_); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return detail::compose(a.as_perm(), b.as_perm());
  }
  GroupElement inv(const GroupElement& a) const override { return detail::invert(a.as_perm()); }
  std::vector<GroupElement> generators() const override {
    if (n_ == 1) return {identity()};
    Perm swap = detail::identity_perm(n_);
    std::swap(swap.images[0], swap.images[1]);
    if (n_ == 2) return {swap};
    Perm cycle;
    for (std::size_t i = 0; i < n_; ++i) cycle.images.push_back(static_cast<int>((i + 1) % n_));
    return {swap, cycle};
  }
  bool is_finite() const override { return true; }
  bool is_trivial() const override { return n_ == 1; }
  bool fc_member(const GroupElement&) const override { return true; }
  IccStatus icc_status() const override { return detail::finite_icc(*this); }
  std::optional<GroupElement> fc_nontrivial_example() const override {
    if (n_ == 1) return std::nullopt;
    return all_elements_sorted().at(1);
  }
  std::vector<GroupElement> invariant_set_example() const override {
    return detail::finite_class_of_first_nonidentity(std::make_shared<SymmetricGroup>(n_));
  }
  GroupElement parse(std::string_view text) const override {
    Perm p{detail::parse_int_list(text)};
    require(detail::is_bijection(p.images, n_), ErrorCode::MalformedLiteral,
            "'" + std::string(text) + "' is not a permutation of degree " + std::to_string(n_));
    return p;
  }
  std::string format(const GroupElement& x) const override { return detail::format_int_list(x.as_perm().images); }

 private:
  std::vector<GroupElement> all_elements_sorted() const { return all_elements(std::make_shared<SymmetricGroup>(n_)); }

  std::size_t n_;
};

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {
    require(rank >= 1 && rank <= 26, ErrorCode::InvalidInstance, "free rank must be in [1,26]");
  }
  int rank() const { return rank_; }

  GroupKind kind() const override { return GroupKind::Free; }
  std::string name() const override { return "free " + std::to_string(rank_); }
  PayloadKind payload_kind() const override { return PayloadKind::FreeWord; }
  GroupElement identity() const override { return Word{}; }
  bool is_valid(const GroupElement& x) const override {
    const auto& w = x.as_word().letters;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0 || w[i] > rank_ || w[i] < -rank_) return false;
      if (i > 0 && w[i] == -w[i - 1]) return false;
    }
    return true;
  }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    Word out = a.as_word();
    for (int l : b.as_word().letters) {
      if (!out.letters.empty() && out.letters.back() == -l) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }
  GroupElement inv(const GroupElement& a) const override {
    Word out;
    const auto& w = a.as_word().letters;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-*it);
    return out;
  }
  std::vector<GroupElement> generators() const override {
    std::vector<GroupElement> out;
    for (int k = 1; k <= rank_; ++k) out.push_back(Word{{k}});
    return out;
  }
  bool is_finite() const override { return false; }
  bool is_trivial() const override { return false; }
  bool fc_member(const GroupElement& x) const override {
    return rank_ == 1 || x.as_word().letters.empty();
  }
  IccStatus icc_status() const override {
    if (rank_ == 1) return {Tri::No, Provenance::Declared, "free of rank 1 is infinite cyclic, hence abelian"};
    return {Tri::Yes, Provenance::Declared,
            "free of rank >= 2: centralizers are cyclic of infinite index, so nontrivial classes are infinite"};
  }
  std::optional<GroupElement> fc_nontrivial_example() const override {
    if (rank_ == 1) return GroupElement{Word{{1}}};
    return std::nullopt;
  }
  std::vector<GroupElement> invariant_set_example() const override {
    if (rank_ == 1) return {Word{{1}}};
    fail(ErrorCode::Precondition, name() + " is icc");
  }
  GroupElement parse(std::string_view text) const override {
    text = literal::trim(text);
    if (text == "1" || text == "e") return Word{};
    GroupElement acc = Word{};
    for (auto token : literal::split_top(text, '*')) {
      if (token.empty()) fail(ErrorCode::MalformedLiteral, "empty factor in word '" + std::string(text) + "'");
      const char c = token.front();
      if (c < 'a' || c >= 'a' + rank_)
        fail(ErrorCode::MalformedLiteral, "unknown generator in '" + std::string(token) + "' for " + name());
      std::int64_t exp = 1;
      auto rest = literal::trim(token.substr(1));
      if (!rest.empty()) {
        if (rest.front() != '^') fail(ErrorCode::MalformedLiteral, "bad factor '" + std::string(token) + "'");
        exp = literal::parse_int(rest.substr(1));
      }
      const int letter = (c - 'a' + 1) * (exp < 0 ? -1 : 1);
      for (std::int64_t k = 0; k < (exp < 0 ? -exp : exp); ++k) acc = mul(acc, Word{{letter}});
    }
    return acc;
  }
  std::string format(const GroupElement& x) const override {
    const auto& w = x.as_word().letters;
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const int run = static_cast<int>(j - i) * (w[i] < 0 ? -1 : 1);
      if (!s.empty()) s += "*";
      s += static_cast<char>('a' + (w[i] < 0 ? -w[i] : w[i]) - 1);
      if (run != 1) s += "^" + std::to_string(run);
      i = j;
    }
    return s;
  }

 private:
  int rank_;
};

// Finite group given by its multiplication table on {0..n-1}.
class FiniteCayleyGroup final : public Group {
 public:
  explicit FiniteCayleyGroup(std::vector<std::vector<int>> table, std::vector<int> gens = {})
      : table_(std::move(table)) {
    const std::size_t n = table_.size();
    require(n >= 1, ErrorCode::InvalidInstance, "Cayley table is empty");
    for (const auto& row : table_)
      require(detail::is_bijection(row, n), ErrorCode::InvalidInstance, "Cayley table row is not a permutation");
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
      if (ok) identity_ = static_cast<int>(e);
    }
    require(identity_ >= 0, ErrorCode::InvalidInstance, "Cayley table has no identity");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          require(at(at(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) ==
                      at(static_cast<int>(a), at(static_cast<int>(b), static_cast<int>(c))),
                  ErrorCode::InvalidInstance, "Cayley table is not associative");
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (at(static_cast<int>(a), static_cast<int>(b)) == identity_) inverse_[a] = static_cast<int>(b);
    if (gens.empty()) {
      for (std::size_t a = 0; a < n; ++a)
        if (static_cast<int>(a) != identity_) gens.push_back(static_cast<int>(a));
      if (gens.empty()) gens.push_back(identity_);
    }
    for (int s : gens)
      require(s >= 0 && static_cast<std::size_t>(s) < n, ErrorCode::InvalidInstance, "generator out of range");
    gens_ = std::move(gens);
    // The listed generators must generate the whole table.
    std::vector<bool> hit(n, false);
    std::vector<int> stack{identity_};
    hit[static_cast<std::size_t>(identity_)] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s : gens_) {
        int y = at(x, s);
        if (!hit[static_cast<std::size_t>(y)]) {
          hit[static_cast<std::size_t>(y)] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    require(count == n, ErrorCode::InvalidInstance, "listed generators do not generate the Cayley table");
  }

  std::size_t size() const { return table_.size(); }

  GroupKind kind() const override { return GroupKind::FiniteCayley; }
  std::string name() const override { return "finite-cayley " + std::to_string(table_.size()); }
  PayloadKind payload_kind() const override { return PayloadKind::Integer; }
  GroupElement identity() const override { return std::int64_t{identity_}; }
  bool is_valid(const GroupElement& x) const override {
    return x.as_int() >= 0 && static_cast<std::size_t>(x.as_int()) < table_.size();
  }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return std::int64_t{at(static_cast<int>(a.as_int()), static_cast<int>(b.as_int()))};
  }
  GroupElement inv(const GroupElement& a) const override {
    return std::int64_t{inverse_[static_cast<std::size_t>(a.as_int())]};
  }
  std::vector<GroupElement> generators() const override {
    std::vector<GroupElement> out;
    for (int s : gens_) out.push_back(std::int64_t{s});
    return out;
  }
  bool is_finite() const override { return true; }
  bool is_trivial() const override { return table_.size() == 1; }
  bool fc_member(const GroupElement&) const override { return true; }
  IccStatus icc_status() const override { return detail::finite_icc(*this); }
  std::optional<GroupElement> fc_nontrivial_example() const override {
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (static_cast<int>(a) != identity_) return GroupElement{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }
  std::vector<GroupElement> invariant_set_example() const override {
    return detail::finite_class_of_first_nonidentity(std::make_shared<FiniteCayleyGroup>(table_, gens_));
  }
  GroupElement parse(std::string_view text) const override {
    const auto v = literal::parse_int(text);
    require(v >= 0 && static_cast<std::size_t>(v) < table_.size(), ErrorCode::MalformedLiteral,
            "element index out of range for " + name());
    return v;
  }
  std::string format(const GroupElement& x) const override { return std::to_string(x.as_int()); }

 private:
  int at(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  std::vector<std::vector<int>> table_;
  std::vector<int> gens_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

class DirectProductGroup final : public Group {
 public:
  explicit DirectProductGroup(std::vector<GroupHandle> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), ErrorCode::InvalidInstance, "direct product needs at least one factor");
  }
  const std::vector<GroupHandle>& factors() const { return factors_; }

  GroupKind kind() const override { return GroupKind::DirectProduct; }
  std::string name() const override {
    std::string s = "direct-product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? ", " : "") + factors_[i]->name();
    return s + ")";
  }
  PayloadKind payload_kind() const override { return PayloadKind::Product; }
  GroupElement identity() const override {
    Tuple t;
    for (const auto& f : factors_) t.items.push_back(f->identity());
    return t;
  }
  bool is_valid(const GroupElement& x) const override {
    const auto& items = x.as_tuple().items;
    if (items.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].kind() != factors_[i]->payload_kind() || !factors_[i]->is_valid(items[i])) return false;
    }
    return true;
  }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    Tuple t;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      t.items.push_back(factors_[i]->mul(a.as_tuple().items[i], b.as_tuple().items[i]));
    return t;
  }
  GroupElement inv(const GroupElement& a) const override {
    Tuple t;
    for (std::size_t i = 0; i < factors_.size(); ++i) t.items.push_back(factors_[i]->inv(a.as_tuple().items[i]));
    return t;
  }
  std::vector<GroupElement> generators() const override {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (const auto& s : factors_[i]->generators()) {
        Tuple t = identity().as_tuple();
        t.items[i] = s;
        out.push_back(std::move(t));
      }
    }
    return out;
  }
  bool is_finite() const override {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f->is_finite(); });
  }
  bool is_trivial() const override {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f->is_trivial(); });
  }
  bool fc_member(const GroupElement& x) const override {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->fc_member(x.as_tuple().items[i])) return false;
    return true;
  }
  // A product is icc iff it is nontrivial and every nontrivial factor is icc.
  IccStatus icc_status() const override {
    if (is_trivial()) return {Tri::No, Provenance::Computed, "trivial group"};
    if (is_finite()) return detail::finite_icc(*this);
    Tri all = Tri::Yes;
    for (const auto& f : factors_) {
      if (f->is_trivial()) continue;
      const auto s = f->icc_status();
      if (s.answer == Tri::No)
        return {Tri::No, Provenance::Computed, "factor " + f->name() + " is not icc: " + s.justification};
      all = all && s.answer;
    }
    return {all, Provenance::Computed,
            all == Tri::Yes ? "every nontrivial factor is icc" : "some factor has unknown icc status"};
  }
  std::optional<GroupElement> fc_nontrivial_example() const override {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (auto e = factors_[i]->fc_nontrivial_example()) {
        Tuple t = identity().as_tuple();
        t.items[i] = *e;
        return GroupElement{std::move(t)};
      }
    }
    return std::nullopt;
  }
  // xi_A x {1} for the first nontrivial non-icc factor A.
  std::vector<GroupElement> invariant_set_example() const override {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& f = factors_[i];
      if (f->is_trivial() || f->icc_status().answer != Tri::No) continue;
      std::vector<GroupElement> out;
      for (const auto& x : f->invariant_set_example()) {
        Tuple t = identity().as_tuple();
        t.items[i] = x;
        out.push_back(std::move(t));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    fail(ErrorCode::Precondition, name() + " has no non-icc factor");
  }
  GroupElement parse(std::string_view text) const override {
    auto body = literal::unwrap(text, '(', ')');
    if (!body) fail(ErrorCode::MalformedLiteral, "expected (x; y) tuple, got '" + std::string(text) + "'");
    auto parts = literal::split_top(*body, ';');
    require(parts.size() == factors_.size(), ErrorCode::MalformedLiteral, "tuple arity mismatch for " + name());
    Tuple t;
    for (std::size_t i = 0; i < parts.size(); ++i) t.items.push_back(factors_[i]->parse(parts[i]));
    return t;
  }
  std::string format(const GroupElement& x) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "; ";
      s += factors_[i]->format(x.as_tuple().items[i]);
    }
    return s + ")";
  }

 private:
  std::vector<GroupHandle> factors_;
};

inline GroupHandle make_integers() { return std::make_shared<IntegerGroup>(); }
inline GroupHandle make_cyclic(std::int64_t n) { return std::make_shared<CyclicGroup>(n); }
inline GroupHandle make_symmetric(std::size_t n) { return std::make_shared<SymmetricGroup>(n); }
inline GroupHandle make_free(int rank) { return std::make_shared<FreeGroup>(rank); }
inline GroupHandle make_finite_cayley(std::vector<std::vector<int>> table, std::vector<int> gens = {}) {
  return std::make_shared<FiniteCayleyGroup>(std::move(table), std::move(gens));
}
inline GroupHandle make_direct_product(std::vector<GroupHandle> factors) {
  return std::make_shared<DirectProductGroup>(std::move(factors));
}

inline GroupElement parse_element(const Group& g, std::string_view text) { return g.parse(text); }
inline std::string format_element(const Group& g, const GroupElement& x) { return g.format(x); }

}  // namespace wricc
