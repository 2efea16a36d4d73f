#pragma once

// Countable Q-sets: left actions of a catalog group Q on a carrier Omega,
// together with the structural oracles the icc criterion needs (orbit
// infinitude, kernel versus FC(Q), freeness). Oracles are answered per
// carrier kind, never by unbounded search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "group.hpp"
#include "literal.hpp"
#include "tristate.hpp"

namespace wricc {

enum class QSetKind { FiniteExplicit, Regular, IntMod, Trivial, DisjointUnion };

// Pointwise stabilizer of Omega, in whatever form the carrier can express.
struct Kernel {
  enum class Kind { Trivial, Whole, Multiples, Explicit, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t modulus = 0;            // Multiples: n*Z inside Q = Z
  std::vector<GroupElement> elements;  // Explicit: sorted, finite Q only
};

class QSet {
 public:
  explicit QSet(GroupHandle q) : q_(std::move(q)) {}
  virtual ~QSet() = default;

  const GroupHandle& acting() const { return q_; }

  virtual QSetKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual bool is_valid(const OmegaPoint& x) const = 0;
  // Unchecked left action on valid inputs.
  virtual OmegaPoint apply(const GroupElement& q, const OmegaPoint& x) const = 0;
  // nullopt for infinite carriers.
  virtual std::optional<std::size_t> size() const = 0;

  virtual Tri all_orbits_infinite() const = 0;
  virtual Tri orbit_infinite(const OmegaPoint& x) const = 0;
  virtual Kernel kernel() const = 0;
  virtual Tri is_free_action() const = 0;
  // A point whose orbit is finite, if the carrier has one.
  virtual std::optional<OmegaPoint> finite_orbit_seed() const = 0;

  // First `count` points in the carrier's enumeration order.
  virtual std::vector<OmegaPoint> points_prefix(std::size_t count) const = 0;
  // One orbit seed per component.
  virtual std::vector<OmegaPoint> default_window() const = 0;

  virtual OmegaPoint parse_point(std::string_view text) const = 0;
  virtual std::string format_point(const OmegaPoint& x) const = 0;

 protected:
  GroupHandle q_;
};

using QSetHandle = std::shared_ptr<const QSet>;

inline void check_point(const QSet& s, const OmegaPoint& x) {
  if (!s.is_valid(x)) fail(ErrorCode::KindMismatch, "point does not belong to carrier " + s.name());
}

inline OmegaPoint act(const QSet& s, const GroupElement& q, const OmegaPoint& x) {
  check_element(*s.acting(), q);
  check_point(s, x);
  return s.apply(q, x);
}

inline Tri all_orbits_infinite(const QSet& s) { return s.all_orbits_infinite(); }
inline Tri is_free_action(const QSet& s) { return s.is_free_action(); }

// --- orbits ------------------------------------------------------------------

enum class OrbitStatus { ExactFinite, ExceedsBudget };

constexpr std::string_view to_string(OrbitStatus s) {
  return s == OrbitStatus::ExactFinite ? "ExactFinite" : "ExceedsBudget";
}

struct OrbitReport {
  OrbitStatus status = OrbitStatus::ExceedsBudget;
  std::vector<OmegaPoint> points;  // sorted
  std::size_t budget = 0;
};

inline OrbitReport orbit_bounded(const QSet& s, const OmegaPoint& x, std::size_t budget) {
  require(budget > 0, ErrorCode::ZeroBudget, "orbit budget must be positive");
  check_point(s, x);
  const auto steps = generators_and_inverses(*s.acting());
  std::unordered_set<OmegaPoint, Hash> seen{x};
  std::vector<OmegaPoint> frontier{x};
  bool capped = false;
  while (!frontier.empty() && !capped) {
    std::vector<OmegaPoint> next;
    for (const auto& y : frontier) {
      for (const auto& q : steps) {
        OmegaPoint z = s.apply(q, y);
        if (seen.insert(z).second) {
          next.push_back(std::move(z));
          if (seen.size() > budget) {
            capped = true;
            break;
          }
        }
      }
      if (capped) break;
    }
    frontier = std::move(next);
  }
  OrbitReport report;
  report.budget = budget;
  report.points.assign(seen.begin(), seen.end());
  std::sort(report.points.begin(), report.points.end());
  // More than `budget` points seen means the orbit exceeds it.
  report.status = capped ? OrbitStatus::ExceedsBudget : OrbitStatus::ExactFinite;
  return report;
}

// --- kernel versus FC(Q) -----------------------------------------------------

struct KernelFcReport {
  Tri answer = Tri::Unknown;
  std::optional<GroupElement> q0;  // present iff answer == Yes
  std::string reason;
};

// Answers "does some q0 != 1 in FC(Q) fix Omega pointwise?" (the negation of
// condition (i) of the criterion).
inline KernelFcReport kernel_meets_fc(const QSet& s) {
  const Group& q = *s.acting();
  const Kernel k = s.kernel();
  KernelFcReport out;
  switch (k.kind) {
    case Kernel::Kind::Trivial:
      out = {Tri::No, std::nullopt, "the action is faithful"};
      break;
    case Kernel::Kind::Whole:
      if (q.kind() == GroupKind::Wreath) {
        out = {Tri::Unknown, std::nullopt, "no FC rule for " + q.name()};
      } else if (auto e = q.fc_nontrivial_example()) {
        out = {Tri::Yes, e, "Q acts trivially and FC(Q) is nontrivial"};
      } else {
        out = {Tri::No, std::nullopt, "Q acts trivially but FC(Q) is trivial"};
      }
      break;
    case Kernel::Kind::Multiples:
      out = {Tri::Yes, GroupElement{k.modulus},
             "kernel is " + std::to_string(k.modulus) + "Z and Z is abelian"};
      break;
    case Kernel::Kind::Explicit: {
      const GroupElement id = q.identity();
      for (const auto& e : k.elements) {
        if (e == id) continue;
        out = {Tri::Yes, e, "nontrivial kernel element of a finite Q (FC(Q) = Q)"};
        break;
      }
      if (out.answer != Tri::Yes) out = {Tri::No, std::nullopt, "the action is faithful"};
      break;
    }
    case Kernel::Kind::Unknown:
      out = {Tri::Unknown, std::nullopt, "kernel not expressible for " + s.name()};
      break;
  }
  if (out.q0) {
    require(q.fc_member(*out.q0), ErrorCode::Precondition, "kernel witness is not in FC(Q)");
    if (auto n = s.size()) {
      for (const auto& x : s.points_prefix(*n))
        require(s.apply(*out.q0, x) == x, ErrorCode::Precondition, "kernel witness moves a point");
    }
  }
  return out;
}

// --- carriers ----------------------------------------------------------------

// Q acting on itself by left multiplication.
class RegularQSet final : public QSet {
 public:
  explicit RegularQSet(GroupHandle q) : QSet(std::move(q)) {}

  QSetKind kind() const override { return QSetKind::Regular; }
  std::string name() const override { return "regular(" + q_->name() + ")"; }
  bool is_valid(const OmegaPoint& x) const override {
    if (x.part != 0 || x.is_int()) return false;
    return x.as_element().kind() == q_->payload_kind() && q_->is_valid(x.as_element());
  }
  OmegaPoint apply(const GroupElement& q, const OmegaPoint& x) const override {
    return OmegaPoint(q_->mul(q, element_of(x)));
  }
  std::optional<std::size_t> size() const override {
    if (!q_->is_finite()) return std::nullopt;
    return all_elements(q_).size();
  }
  Tri all_orbits_infinite() const override { return from_bool(!q_->is_finite()); }
  Tri orbit_infinite(const OmegaPoint&) const override { return from_bool(!q_->is_finite()); }
  Kernel kernel() const override { return {Kernel::Kind::Trivial, 0, {}}; }
  Tri is_free_action() const override { return Tri::Yes; }
  std::optional<OmegaPoint> finite_orbit_seed() const override {
    if (!q_->is_finite()) return std::nullopt;
    return OmegaPoint(q_->identity());
  }
  std::vector<OmegaPoint> points_prefix(std::size_t count) const override {
    std::vector<OmegaPoint> out;
    for (auto& g : ball_prefix(q_, count)) out.emplace_back(std::move(g));
    return out;
  }
  std::vector<OmegaPoint> default_window() const override { return {OmegaPoint(q_->identity())}; }
  OmegaPoint parse_point(std::string_view text) const override { return OmegaPoint(q_->parse(text)); }
  std::string format_point(const OmegaPoint& x) const override { return q_->format(element_of(x)); }

 private:
  static const GroupElement& element_of(const OmegaPoint& x) { return x.as_element(); }
};

class TrivialQSet final : public QSet {
 public:
  TrivialQSet(GroupHandle q, std::size_t size) : QSet(std::move(q)), size_(size) {}

  QSetKind kind() const override { return QSetKind::Trivial; }
  std::string name() const override { return "trivial " + std::to_string(size_); }
  bool is_valid(const OmegaPoint& x) const override {
    return x.part == 0 && x.is_int() && x.as_int() >= 0 && static_cast<std::size_t>(x.as_int()) < size_;
  }
  OmegaPoint apply(const GroupElement&, const OmegaPoint& x) const override { return x; }
  std::optional<std::size_t> size() const override { return size_; }
  Tri all_orbits_infinite() const override { return from_bool(size_ == 0); }
  Tri orbit_infinite(const OmegaPoint&) const override { return Tri::No; }
  Kernel kernel() const override { return {Kernel::Kind::Whole, 0, {}}; }
  Tri is_free_action() const override { return from_bool(size_ == 0 || q_->is_trivial()); }
  std::optional<OmegaPoint> finite_orbit_seed() const override {
    if (size_ == 0) return std::nullopt;
    return OmegaPoint(std::int64_t{0});
  }
  std::vector<OmegaPoint> points_prefix(std::size_t count) const override {
    std::vector<OmegaPoint> out;
    for (std::size_t i = 0; i < std::min(count, size_); ++i) out.emplace_back(static_cast<std::int64_t>(i));
    return out;
  }
  std::vector<OmegaPoint> default_window() const override { return points_prefix(1); }
  OmegaPoint parse_point(std::string_view text) const override {
    OmegaPoint p(literal::parse_int(text));
    require(is_valid(p), ErrorCode::MalformedLiteral, "point outside " + name());
    return p;
  }
  std::string format_point(const OmegaPoint& x) const override { return std::to_string(x.as_int()); }

 private:
  std::size_t size_;
};

// Z acting on Z/n by translation.
class IntModQSet final : public QSet {
 public:
  IntModQSet(GroupHandle q, std::int64_t n) : QSet(std::move(q)), n_(n) {
    require(q_->kind() == GroupKind::Integers, ErrorCode::InvalidInstance, "int-mod carriers require Q = integers");
    require(n >= 1, ErrorCode::InvalidInstance, "int-mod modulus must be >= 1");
  }

  QSetKind kind() const override { return QSetKind::IntMod; }
  std::string name() const override { return "int-mod " + std::to_string(n_); }
  bool is_valid(const OmegaPoint& x) const override {
    return x.part == 0 && x.is_int() && x.as_int() >= 0 && x.as_int() < n_;
  }
  OmegaPoint apply(const GroupElement& q, const OmegaPoint& x) const override {
    return OmegaPoint(((x.as_int() + q.as_int()) % n_ + n_) % n_);
  }
  std::optional<std::size_t> size() const override { return static_cast<std::size_t>(n_); }
  Tri all_orbits_infinite() const override { return Tri::No; }
  Tri orbit_infinite(const OmegaPoint&) const override { return Tri::No; }
  Kernel kernel() const override { return {Kernel::Kind::Multiples, n_, {}}; }
  Tri is_free_action() const override { return Tri::No; }
  std::optional<OmegaPoint> finite_orbit_seed() const override { return OmegaPoint(std::int64_t{0}); }
  std::vector<OmegaPoint> points_prefix(std::size_t count) const override {
    std::vector<OmegaPoint> out;
    for (std::int64_t i = 0; i < n_ && out.size() < count; ++i) out.emplace_back(i);
    return out;
  }
  std::vector<OmegaPoint> default_window() const override { return {OmegaPoint(std::int64_t{0})}; }
  OmegaPoint parse_point(std::string_view text) const override {
    OmegaPoint p(literal::parse_int(text));
    require(is_valid(p), ErrorCode::MalformedLiteral, "residue outside " + name());
    return p;
  }
  std::string format_point(const OmegaPoint& x) const override { return std::to_string(x.as_int()); }

 private:
  std::int64_t n_;
};

// Finite Q acting on {0..size-1} through one image table per generator of Q
// (in the order Q lists its generators).
class ExplicitQSet final : public QSet {
 public:
  ExplicitQSet(GroupHandle q, std::size_t size, std::vector<std::vector<int>> tables)
      : QSet(std::move(q)), size_(size) {
    require(q_->is_finite(), ErrorCode::InvalidInstance, "finite-explicit carriers require a finite Q");
    const auto gens = q_->generators();
    require(tables.size() == gens.size(), ErrorCode::InvalidAction,
            "need one action table per generator of " + q_->name());
    for (const auto& t : tables)
      require(detail::is_bijection(t, size_), ErrorCode::InvalidAction, "action table is not a permutation");
    // Walk the Cayley graph by left multiplication, checking every edge.
    std::vector<int> id(size_);
    std::iota(id.begin(), id.end(), 0);
    perms_.emplace(q_->identity(), id);
    std::vector<GroupElement> frontier{q_->identity()};
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& x : frontier) {
        const auto px = perms_.at(x);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          GroupElement y = q_->mul(gens[i], x);
          std::vector<int> py(size_);
          for (std::size_t w = 0; w < size_; ++w) py[w] = tables[i][static_cast<std::size_t>(px[w])];
          auto [it, inserted] = perms_.emplace(y, py);
          if (inserted) {
            next.push_back(std::move(y));
          } else {
            require(it->second == py, ErrorCode::InvalidAction, "action tables do not define a homomorphism");
          }
        }
      }
      frontier = std::move(next);
    }
  }

  QSetKind kind() const override { return QSetKind::FiniteExplicit; }
  std::string name() const override { return "explicit " + std::to_string(size_) + " over " + q_->name(); }
  bool is_valid(const OmegaPoint& x) const override {
    return x.part == 0 && x.is_int() && x.as_int() >= 0 && static_cast<std::size_t>(x.as_int()) < size_;
  }
  OmegaPoint apply(const GroupElement& q, const OmegaPoint& x) const override {
    return OmegaPoint(std::int64_t{perms_.at(q)[static_cast<std::size_t>(x.as_int())]});
  }
  std::optional<std::size_t> size() const override { return size_; }
  Tri all_orbits_infinite() const override { return from_bool(size_ == 0); }
  Tri orbit_infinite(const OmegaPoint&) const override { return Tri::No; }
  Kernel kernel() const override {
    Kernel k{Kernel::Kind::Explicit, 0, {}};
    for (const auto& [g, p] : perms_) {
      bool fixes = true;
      for (std::size_t w = 0; w < size_ && fixes; ++w) fixes = p[w] == static_cast<int>(w);
      if (fixes) k.elements.push_back(g);
    }
    return k;
  }
  // Exhaustive: no nontrivial q fixes any point.
  Tri is_free_action() const override {
    const GroupElement id = q_->identity();
    for (const auto& [g, p] : perms_) {
      if (g == id) continue;
      for (std::size_t w = 0; w < size_; ++w)
        if (p[w] == static_cast<int>(w)) return Tri::No;
    }
    return Tri::Yes;
  }
  std::optional<OmegaPoint> finite_orbit_seed() const override {
    if (size_ == 0) return std::nullopt;
    return OmegaPoint(std::int64_t{0});
  }
  std::vector<OmegaPoint> points_prefix(std::size_t count) const override {
    std::vector<OmegaPoint> out;
    for (std::size_t i = 0; i < std::min(count, size_); ++i) out.emplace_back(static_cast<std::int64_t>(i));
    return out;
  }
  std::vector<OmegaPoint> default_window() const override { return points_prefix(1); }
  OmegaPoint parse_point(std::string_view text) const override {
    OmegaPoint p(literal::parse_int(text));
    require(is_valid(p), ErrorCode::MalformedLiteral, "point outside " + name());
    return p;
  }
  std::string format_point(const OmegaPoint& x) const override { return std::to_string(x.as_int()); }

 private:
  std::size_t size_;
  std::map<GroupElement, std::vector<int>> perms_;
};

// Parts are flattened on construction, so points are (part, inner point).
class UnionQSet final : public QSet {
 public:
  explicit UnionQSet(std::vector<QSetHandle> parts) : QSet(parts.empty() ? nullptr : parts.front()->acting()) {
    require(!parts.empty(), ErrorCode::InvalidInstance, "disjoint union needs at least one part");
    for (auto& p : parts) {
      require(p->acting() == q_ || p->acting()->name() == q_->name(), ErrorCode::InvalidInstance,
              "disjoint-union parts must share the acting group");
      if (auto u = std::dynamic_pointer_cast<const UnionQSet>(p)) {
        parts_.insert(parts_.end(), u->parts_.begin(), u->parts_.end());
      } else {
        parts_.push_back(std::move(p));
      }
    }
  }

  const std::vector<QSetHandle>& parts() const { return parts_; }

  QSetKind kind() const override { return QSetKind::DisjointUnion; }
  std::string name() const override {
    std::string s = "union(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ", " : "") + parts_[i]->name();
    return s + ")";
  }
  bool is_valid(const OmegaPoint& x) const override { return x.part < parts_.size() && parts_[x.part]->is_valid(inner(x)); }
  OmegaPoint apply(const GroupElement& q, const OmegaPoint& x) const override {
    return outer(x.part, parts_[x.part]->apply(q, inner(x)));
  }
  std::optional<std::size_t> size() const override {
    std::size_t total = 0;
    for (const auto& p : parts_) {
      auto n = p->size();
      if (!n) return std::nullopt;
      total += *n;
    }
    return total;
  }
  Tri all_orbits_infinite() const override {
    Tri acc = Tri::Yes;
    for (const auto& p : parts_) acc = acc && p->all_orbits_infinite();
    return acc;
  }
  Tri orbit_infinite(const OmegaPoint& x) const override { return parts_[x.part]->orbit_infinite(inner(x)); }
  // Intersection of the part kernels.
  Kernel kernel() const override {
    Kernel acc{Kernel::Kind::Whole, 0, {}};
    for (const auto& p : parts_) acc = intersect(acc, p->kernel());
    return acc;
  }
  Tri is_free_action() const override {
    Tri acc = Tri::Yes;
    for (const auto& p : parts_) acc = acc && p->is_free_action();
    return acc;
  }
  std::optional<OmegaPoint> finite_orbit_seed() const override {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (auto s = parts_[i]->finite_orbit_seed()) return outer(i, *s);
    return std::nullopt;
  }
  // Round-robin over the parts so every part shows up early.
  std::vector<OmegaPoint> points_prefix(std::size_t count) const override {
    std::vector<std::vector<OmegaPoint>> per;
    for (const auto& p : parts_) per.push_back(p->points_prefix(count));
    std::vector<OmegaPoint> out;
    for (std::size_t k = 0; out.size() < count; ++k) {
      bool any = false;
      for (std::size_t i = 0; i < per.size() && out.size() < count; ++i) {
        if (k < per[i].size()) {
          out.push_back(outer(i, per[i][k]));
          any = true;
        }
      }
      if (!any) break;
    }
    return out;
  }
  std::vector<OmegaPoint> default_window() const override {
    std::vector<OmegaPoint> out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (const auto& w : parts_[i]->default_window()) out.push_back(outer(i, w));
    return out;
  }
  // Literal `part/point`.
  OmegaPoint parse_point(std::string_view text) const override {
    auto slash = literal::find_top(text, '/');
    if (!slash) fail(ErrorCode::MalformedLiteral, "union point must be 'part/point', got '" + std::string(text) + "'");
    const auto part = literal::parse_int(text.substr(0, *slash));
    require(part >= 0 && static_cast<std::size_t>(part) < parts_.size(), ErrorCode::MalformedLiteral,
            "union part index out of range");
    return outer(static_cast<std::size_t>(part), parts_[static_cast<std::size_t>(part)]->parse_point(text.substr(*slash + 1)));
  }
  std::string format_point(const OmegaPoint& x) const override {
    return std::to_string(x.part) + "/" + parts_[x.part]->format_point(inner(x));
  }

 private:
  static OmegaPoint inner(const OmegaPoint& x) { return OmegaPoint(0, x.value); }
  static OmegaPoint outer(std::size_t part, const OmegaPoint& x) { return OmegaPoint(part, x.value); }

  static Kernel intersect(const Kernel& a, const Kernel& b) {
    using K = Kernel::Kind;
    if (a.kind == K::Trivial || b.kind == K::Trivial) return {K::Trivial, 0, {}};
    if (a.kind == K::Whole) return b;
    if (b.kind == K::Whole) return a;
    if (a.kind == K::Unknown || b.kind == K::Unknown) return {K::Unknown, 0, {}};
    if (a.kind == K::Multiples && b.kind == K::Multiples) return {K::Multiples, std::lcm(a.modulus, b.modulus), {}};
    if (a.kind == K::Explicit && b.kind == K::Explicit) {
      Kernel k{K::Explicit, 0, {}};
      std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                            std::back_inserter(k.elements));
      return k;
    }
    return {K::Unknown, 0, {}};
  }

  std::vector<QSetHandle> parts_;
};

inline QSetHandle make_regular(GroupHandle q) { return std::make_shared<RegularQSet>(std::move(q)); }
inline QSetHandle make_trivial_qset(GroupHandle q, std::size_t size) {
  return std::make_shared<TrivialQSet>(std::move(q), size);
}
inline QSetHandle make_int_mod(GroupHandle q, std::int64_t n) { return std::make_shared<IntModQSet>(std::move(q), n); }
inline QSetHandle make_explicit(GroupHandle q, std::size_t size, std::vector<std::vector<int>> tables) {
  return std::make_shared<ExplicitQSet>(std::move(q), size, std::move(tables));
}
inline QSetHandle make_union(std::vector<QSetHandle> parts) { return std::make_shared<UnionQSet>(std::move(parts)); }

// Natural action of a symmetric group on {0..n-1}.
inline QSetHandle make_natural(GroupHandle q) {
  auto sym = std::dynamic_pointer_cast<const SymmetricGroup>(q);
  require(sym != nullptr, ErrorCode::InvalidInstance, "natural carriers require Q = symmetric n");
  std::vector<std::vector<int>> tables;
  for (const auto& s : q->generators()) tables.push_back(s.as_perm().images);
  return make_explicit(std::move(q), sym->degree(), std::move(tables));
}

}  // namespace wricc
