#pragma once

// Value types shared by every module: group elements, points of a Q-set and
// the finitely supported maps that make up wreath elements. The three are
// mutually recursive (a regular Q-set has group elements as points, a nested
// wreath product has wreath elements as group elements), so they live here
// together with their total order and hashing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace wricc {

struct WreathElement;

// Image list of a permutation of {0..n-1}.
struct Perm {
  std::vector<int> images;
};

// Freely reduced word; letter k>0 is generator k, -k its inverse.
struct Word {
  std::vector<int> letters;
};

struct GroupElement;

struct Tuple {
  std::vector<GroupElement> items;
};

struct WreathRef {
  std::shared_ptr<const WreathElement> value;
};

enum class PayloadKind : int { Integer = 0, Permutation = 1, FreeWord = 2, Product = 3, Wreath = 4 };

struct GroupElement {
  std::variant<std::int64_t, Perm, Word, Tuple, WreathRef> payload;

  GroupElement() : payload(std::int64_t{0}) {}
  GroupElement(std::int64_t v) : payload(v) {}  // NOLINT(google-explicit-constructor)
  GroupElement(Perm p) : payload(std::move(p)) {}  // NOLINT
  GroupElement(Word w) : payload(std::move(w)) {}  // NOLINT
  GroupElement(Tuple t) : payload(std::move(t)) {}  // NOLINT
  GroupElement(WreathRef r) : payload(std::move(r)) {}  // NOLINT

  PayloadKind kind() const { return static_cast<PayloadKind>(payload.index()); }

  std::int64_t as_int() const { return std::get<std::int64_t>(payload); }
  const Perm& as_perm() const { return std::get<Perm>(payload); }
  const Word& as_word() const { return std::get<Word>(payload); }
  const Tuple& as_tuple() const { return std::get<Tuple>(payload); }
  const WreathElement& as_wreath() const { return *std::get<WreathRef>(payload).value; }
};

// A point of a Q-set. `part` indexes the component of a disjoint union (0
// otherwise); `value` is an integer index/residue or a Q-element for regular
// carriers.
struct OmegaPoint {
  std::size_t part = 0;
  std::variant<std::int64_t, GroupElement> value = std::int64_t{0};

  OmegaPoint() = default;
  OmegaPoint(std::int64_t v) : value(v) {}  // NOLINT
  OmegaPoint(GroupElement g) : value(std::move(g)) {}  // NOLINT
  OmegaPoint(std::size_t p, std::variant<std::int64_t, GroupElement> v) : part(p), value(std::move(v)) {}

  bool is_int() const { return value.index() == 0; }
  std::int64_t as_int() const { return std::get<std::int64_t>(value); }
  const GroupElement& as_element() const { return std::get<GroupElement>(value); }
};

// Finitely supported map Omega -> D. Canonical form: keys strictly
// increasing, no stored identity values. The empty table is epsilon.
struct FinSuppMap {
  std::vector<std::pair<OmegaPoint, GroupElement>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

struct WreathElement {
  FinSuppMap phi;
  GroupElement q;
};

std::strong_ordering compare(const GroupElement& a, const GroupElement& b);
std::strong_ordering compare(const OmegaPoint& a, const OmegaPoint& b);
std::strong_ordering compare(const FinSuppMap& a, const FinSuppMap& b);
std::strong_ordering compare(const WreathElement& a, const WreathElement& b);

namespace detail {

// Shortlex letter order: a < a^-1 < b < b^-1 < ...
inline int letter_key(int letter) { return 2 * (letter < 0 ? -letter : letter) + (letter < 0 ? 1 : 0); }

template <typename T, typename Cmp>
std::strong_ordering lex(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace detail

inline std::strong_ordering compare(const GroupElement& a, const GroupElement& b) {
  if (a.payload.index() != b.payload.index()) return a.payload.index() <=> b.payload.index();
  switch (a.kind()) {
    case PayloadKind::Integer:
      return a.as_int() <=> b.as_int();
    case PayloadKind::Permutation:
      return detail::lex(a.as_perm().images, b.as_perm().images, [](int x, int y) { return x <=> y; });
    case PayloadKind::FreeWord: {
      const auto& x = a.as_word().letters;
      const auto& y = b.as_word().letters;
      if (x.size() != y.size()) return x.size() <=> y.size();
      return detail::lex(x, y, [](int l, int r) { return detail::letter_key(l) <=> detail::letter_key(r); });
    }
    case PayloadKind::Product:
      return detail::lex(a.as_tuple().items, b.as_tuple().items,
                         [](const GroupElement& l, const GroupElement& r) { return compare(l, r); });
    case PayloadKind::Wreath:
      return compare(a.as_wreath(), b.as_wreath());
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const OmegaPoint& a, const OmegaPoint& b) {
  if (a.part != b.part) return a.part <=> b.part;
  if (a.value.index() != b.value.index()) return a.value.index() <=> b.value.index();
  if (a.is_int()) return a.as_int() <=> b.as_int();
  return compare(a.as_element(), b.as_element());
}

inline std::strong_ordering compare(const FinSuppMap& a, const FinSuppMap& b) {
  return detail::lex(a.entries, b.entries, [](const auto& l, const auto& r) {
    if (auto c = compare(l.first, r.first); c != 0) return c;
    return compare(l.second, r.second);
  });
}

inline std::strong_ordering compare(const WreathElement& a, const WreathElement& b) {
  if (auto c = compare(a.phi, b.phi); c != 0) return c;
  return compare(a.q, b.q);
}

inline bool operator==(const GroupElement& a, const GroupElement& b) { return compare(a, b) == 0; }
inline bool operator<(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }
inline bool operator==(const OmegaPoint& a, const OmegaPoint& b) { return compare(a, b) == 0; }
inline bool operator<(const OmegaPoint& a, const OmegaPoint& b) { return compare(a, b) < 0; }
inline bool operator==(const FinSuppMap& a, const FinSuppMap& b) { return compare(a, b) == 0; }
inline bool operator==(const WreathElement& a, const WreathElement& b) { return compare(a, b) == 0; }
inline bool operator<(const WreathElement& a, const WreathElement& b) { return compare(a, b) < 0; }

std::size_t hash_value(const GroupElement& g);
std::size_t hash_value(const OmegaPoint& p);
std::size_t hash_value(const WreathElement& w);

inline std::size_t hash_value(const GroupElement& g) {
  std::size_t seed = g.payload.index();
  switch (g.kind()) {
    case PayloadKind::Integer:
      detail::hash_combine(seed, std::hash<std::int64_t>{}(g.as_int()));
      break;
    case PayloadKind::Permutation:
      for (int x : g.as_perm().images) detail::hash_combine(seed, std::hash<int>{}(x));
      break;
    case PayloadKind::FreeWord:
      for (int x : g.as_word().letters) detail::hash_combine(seed, std::hash<int>{}(x));
      break;
    case PayloadKind::Product:
      for (const auto& x : g.as_tuple().items) detail::hash_combine(seed, hash_value(x));
      break;
    case PayloadKind::Wreath:
      detail::hash_combine(seed, hash_value(g.as_wreath()));
      break;
  }
  return seed;
}

inline std::size_t hash_value(const OmegaPoint& p) {
  std::size_t seed = p.part;
  if (p.is_int()) {
    detail::hash_combine(seed, std::hash<std::int64_t>{}(p.as_int()));
  } else {
    detail::hash_combine(seed, hash_value(p.as_element()));
  }
  return seed;
}

inline std::size_t hash_value(const WreathElement& w) {
  std::size_t seed = 0x5eed;
  for (const auto& [x, d] : w.phi.entries) {
    detail::hash_combine(seed, hash_value(x));
    detail::hash_combine(seed, hash_value(d));
  }
  detail::hash_combine(seed, hash_value(w.q));
  return seed;
}

struct Hash {
  std::size_t operator()(const GroupElement& g) const { return hash_value(g); }
  std::size_t operator()(const OmegaPoint& p) const { return hash_value(p); }
  std::size_t operator()(const WreathElement& w) const { return hash_value(w); }
};

inline GroupElement wrap(WreathElement w) {
  return GroupElement(WreathRef{std::make_shared<const WreathElement>(std::move(w))});
}

}  // namespace wricc
