#pragma once

// Machine-checkable certificates for both verdicts of the icc criterion.
//
// Non-icc: a finite, nonempty, conjugation-invariant set of nontrivial
// elements of G. Either {(eps, x) : x in q0^Q} for a nontrivial FC element q0
// fixing Omega pointwise, or the maps with support in a finite orbit O and
// values in a finite invariant set xi of D.
//
// Icc: for a given g != 1, a deterministic stream of conjugators h_n whose
// conjugates g^{h_n} are pairwise distinct. Each family produces its
// conjugates through a closed form; verification recomputes them with
// wr_conjugate.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "decision.hpp"
#include "element.hpp"
#include "error.hpp"
#include "group.hpp"
#include "qset.hpp"
#include "tristate.hpp"
#include "wreath.hpp"

namespace wricc {

// --- certificate types ---------------------------------------------------------

enum class FiniteProvenance { ConditionI, FiniteOrbit, FiniteSlab };

constexpr std::string_view to_string(FiniteProvenance p) {
  switch (p) {
    case FiniteProvenance::ConditionI: return "condition-i";
    case FiniteProvenance::FiniteOrbit: return "finite-orbit";
    default: return "finite-slab";
  }
}

struct FiniteClassCertificate {
  WreathElement base;
  std::vector<WreathElement> members;  // sorted, contains base
  FiniteProvenance provenance = FiniteProvenance::ConditionI;
  std::string size_formula;
  std::size_t predicted_size = 0;

  bool contains(const WreathElement& x) const { return std::binary_search(members.begin(), members.end(), x); }
};

enum class FamilyKind { QTranslation, LambdaTranslation, Gd, ValueConjugation };

constexpr std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::QTranslation: return "q-translation";
    case FamilyKind::LambdaTranslation: return "lambda-translation";
    case FamilyKind::Gd: return "g_d";
    default: return "value-conjugation";
  }
}

struct FamilyMember {
  std::size_t index = 0;  // position in the underlying enumeration, before dedup
  WreathElement conjugator;
  WreathElement conjugate;
};

struct InfiniteFamilyCertificate {
  WreathElement base;
  FamilyKind kind = FamilyKind::QTranslation;
  bool dedup = true;
  // Seeded translation: g' = (zeta_d^y, 1)^-1 g (zeta_d^y, 1) is translated
  // instead of g, and the seed is composed into every conjugator.
  std::optional<GroupElement> seed_value;
  // y for g_d and seeded families, x0 for value conjugation.
  std::optional<OmegaPoint> point;
  // Candidates examined between two emissions before giving up.
  std::size_t max_gap = 10000;
};

using Certificate = std::variant<FiniteClassCertificate, InfiniteFamilyCertificate>;

// --- helpers -------------------------------------------------------------------

// Does q fix every point of Omega? Answered from the carrier's kernel.
inline Tri fixes_pointwise(const QSet& s, const GroupElement& q) {
  const Kernel k = s.kernel();
  switch (k.kind) {
    case Kernel::Kind::Trivial: return from_bool(s.acting()->is_identity(q));
    case Kernel::Kind::Whole: return Tri::Yes;
    case Kernel::Kind::Multiples: return from_bool(q.as_int() % k.modulus == 0);
    case Kernel::Kind::Explicit: return from_bool(std::binary_search(k.elements.begin(), k.elements.end(), q));
    default: break;
  }
  if (auto n = s.size()) {
    for (const auto& x : s.points_prefix(*n))
      if (!(s.apply(q, x) == x)) return Tri::No;
    return Tri::Yes;
  }
  return Tri::Unknown;
}

// First point of Omega (in enumeration order) not fixed by q.
inline OmegaPoint find_moved_point(const WreathProduct& g, const GroupElement& q, std::size_t budget = 10000) {
  for (const auto& y : g.omega()->points_prefix(budget))
    if (!(g.omega()->apply(q, y) == y)) return y;
  fail(ErrorCode::CertificateBudget, "no point moved by " + g.top()->format(q) + " among the first " +
                                         std::to_string(budget) + " points");
}

inline GroupElement first_nonidentity(const GroupHandle& d) {
  ElementStream stream(d);
  while (auto x = stream.next())
    if (!d->is_identity(*x)) return *x;
  fail(ErrorCode::Precondition, d->name() + " is trivial");
}

// --- finite certificates -------------------------------------------------------

inline FiniteClassCertificate cert_condition_i(const WreathProduct& g, const GroupElement& q0,
                                               std::size_t radius = 64, std::size_t max_size = 100000) {
  const Group& q = *g.top();
  check_element(q, q0);
  require(!q.is_identity(q0), ErrorCode::Precondition, "q0 must be nontrivial");
  require(q.fc_member(q0), ErrorCode::Precondition, "q0 must lie in FC(Q)");
  require(fixes_pointwise(*g.omega(), q0) == Tri::Yes, ErrorCode::Precondition, "q0 must fix Omega pointwise");

  const auto cls = class_enum_bounded(g.top(), q0, radius, max_size);
  require(cls.status == ClassStatus::ExactFinite, ErrorCode::CertificateBudget,
          "class of q0 did not close within budget");
  FiniteClassCertificate cert;
  cert.provenance = FiniteProvenance::ConditionI;
  cert.base = {FinSuppMap{}, q0};
  for (const auto& x : cls.elements) cert.members.push_back({FinSuppMap{}, x});
  std::sort(cert.members.begin(), cert.members.end());
  cert.predicted_size = cls.elements.size();
  cert.size_formula = "|q0^Q| = " + std::to_string(cls.elements.size());
  return cert;
}

// All (phi, 1) with nonempty support inside the finite orbit O and values in xi.
inline FiniteClassCertificate cert_finite_orbit(const WreathProduct& g, std::vector<GroupElement> xi,
                                                const OrbitReport& orbit, std::size_t max_size = 1'000'000) {
  const Group& d = *g.base();
  require(!xi.empty(), ErrorCode::Precondition, "xi must be nonempty (D icc or trivial?)");
  for (const auto& x : xi) {
    check_element(d, x);
    require(!d.is_identity(x), ErrorCode::Precondition, "xi must not contain 1");
  }
  require(orbit.status == OrbitStatus::ExactFinite && !orbit.points.empty(), ErrorCode::Precondition,
          "O must be a finite orbit");
  std::sort(xi.begin(), xi.end());
  xi.erase(std::unique(xi.begin(), xi.end()), xi.end());

  const std::size_t base_count = xi.size() + 1;
  double predicted = 1.0;
  for (std::size_t i = 0; i < orbit.points.size(); ++i) predicted *= static_cast<double>(base_count);
  require(predicted - 1.0 <= static_cast<double>(max_size), ErrorCode::CertificateBudget,
          "finite-orbit certificate would exceed " + std::to_string(max_size) + " elements");

  FiniteClassCertificate cert;
  cert.provenance = FiniteProvenance::FiniteOrbit;
  cert.predicted_size = static_cast<std::size_t>(predicted) - 1;
  cert.size_formula = "(|xi|+1)^|O| - 1 = (" + std::to_string(xi.size()) + "+1)^" +
                      std::to_string(orbit.points.size()) + " - 1 = " + std::to_string(cert.predicted_size);

  // Mixed-radix counter over O, digit 0 meaning "identity at this point".
  std::vector<std::size_t> digits(orbit.points.size(), 0);
  const GroupElement q1 = g.top()->identity();
  while (true) {
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == base_count) digits[pos++] = 0;
    if (pos == digits.size()) break;
    FinSuppMap phi;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != 0) phi.entries.emplace_back(orbit.points[i], xi[digits[i] - 1]);
    cert.members.push_back({std::move(phi), q1});
  }
  std::sort(cert.members.begin(), cert.members.end());
  cert.base = {FinSuppMap{{{orbit.points.front(), xi.front()}}}, q1};
  return cert;
}

// For finite G: D^Omega x q^Q (minus the identity) is a union of classes.
inline FiniteClassCertificate cert_finite_slab(const WreathProduct& g, const GroupElement& q,
                                               std::size_t max_size = 1'000'000) {
  const auto n = g.omega()->size();
  require(n.has_value() && g.base()->is_finite() && g.top()->is_finite(), ErrorCode::Precondition,
          "slab certificates need a finite G");
  const auto d_elems = all_elements(g.base());
  const auto points = g.omega()->points_prefix(*n);
  const auto cls = class_enum_bounded(g.top(), q, 1'000'000, 1'000'000);

  double total = static_cast<double>(cls.elements.size());
  for (std::size_t i = 0; i < points.size(); ++i) total *= static_cast<double>(d_elems.size());
  require(total <= static_cast<double>(max_size), ErrorCode::CertificateBudget, "slab too large");

  FiniteClassCertificate cert;
  cert.provenance = FiniteProvenance::FiniteSlab;
  const bool includes_identity = g.top()->is_identity(q);
  std::vector<std::size_t> digits(points.size(), 0);
  std::vector<FinSuppMap> maps;
  while (true) {
    FinSuppMap phi;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (!g.base()->is_identity(d_elems[digits[i]])) phi.entries.emplace_back(points[i], d_elems[digits[i]]);
    detail::canonicalize(*g.base(), phi);
    maps.push_back(std::move(phi));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == d_elems.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  for (const auto& p : cls.elements)
    for (const auto& phi : maps) {
      WreathElement x{phi, p};
      if (!g.is_identity(x)) cert.members.push_back(std::move(x));
    }
  std::sort(cert.members.begin(), cert.members.end());
  cert.predicted_size = static_cast<std::size_t>(total) - (includes_identity ? 1 : 0);
  cert.size_formula = "|D|^|Omega| * |q^Q|" + std::string(includes_identity ? " - 1" : "") + " = " +
                      std::to_string(cert.predicted_size);
  cert.base = includes_identity ? cert.members.front() : WreathElement{FinSuppMap{}, q};
  return cert;
}

// --- infinite families -----------------------------------------------------------

inline InfiniteFamilyCertificate family_q_translation(const WreathProduct& g, const WreathElement& x) {
  check_element(g, x);
  require(!g.top()->fc_member(x.q), ErrorCode::Precondition, "q-translation needs q outside FC(Q)");
  return {x, FamilyKind::QTranslation, true, std::nullopt, std::nullopt};
}

inline InfiniteFamilyCertificate family_lambda_translation(const WreathProduct& g, const WreathElement& x) {
  check_element(g, x);
  require(!x.phi.empty(), ErrorCode::Precondition, "lambda-translation needs phi != eps");
  require(g.top()->fc_member(x.q), ErrorCode::Precondition, "q outside FC(Q): use q-translation");
  bool infinite = false;
  for (const auto& y : support(x.phi)) infinite = infinite || g.omega()->orbit_infinite(y) == Tri::Yes;
  require(infinite, ErrorCode::Precondition, "no support point lies in an infinite orbit");
  return {x, FamilyKind::LambdaTranslation, true, std::nullopt, std::nullopt};
}

// g = (eps, q) with q in FC(Q) is first conjugated by (zeta_d^y, 1), qy != y,
// giving g' = (zeta_{d^-1}^y zeta_d^{qy}, q), then translated.
inline InfiniteFamilyCertificate family_seeded_translation(const WreathProduct& g, const WreathElement& x,
                                                           const GroupElement& d, const OmegaPoint& y) {
  check_element(g, x);
  check_element(*g.base(), d);
  check_point(*g.omega(), y);
  require(x.phi.empty(), ErrorCode::Precondition, "seeded translation starts from (eps, q)");
  require(!g.base()->is_identity(d), ErrorCode::Precondition, "seed value must be nontrivial");
  require(!(g.omega()->apply(x.q, y) == y), ErrorCode::Precondition, "seed point must be moved by q");
  require(g.top()->fc_member(x.q), ErrorCode::Precondition, "q outside FC(Q): use q-translation");
  const OmegaPoint qy = g.omega()->apply(x.q, y);
  bool infinite = g.omega()->orbit_infinite(y) == Tri::Yes || g.omega()->orbit_infinite(qy) == Tri::Yes;
  require(infinite, ErrorCode::Precondition, "seed point does not lie in an infinite orbit");
  return {x, FamilyKind::LambdaTranslation, true, d, y};
}

inline InfiniteFamilyCertificate family_gd(const WreathProduct& g, const WreathElement& x, const OmegaPoint& y) {
  check_element(g, x);
  check_point(*g.omega(), y);
  require(!(g.omega()->apply(x.q, y) == y), ErrorCode::Precondition, "g_d family needs qy != y");
  require(!g.base()->is_finite(), ErrorCode::Precondition, "g_d family needs an infinite D");
  return {x, FamilyKind::Gd, false, std::nullopt, y};
}

inline InfiniteFamilyCertificate family_value_conjugation(const WreathProduct& g, const WreathElement& x,
                                                          const OmegaPoint& x0) {
  check_element(g, x);
  check_point(*g.omega(), x0);
  require(g.top()->is_identity(x.q), ErrorCode::Precondition, "value conjugation needs q = 1");
  require(!x.phi.empty(), ErrorCode::Precondition, "value conjugation needs phi != eps");
  require(!g.base()->is_identity(map_value(*g.base(), x.phi, x0)), ErrorCode::Precondition,
          "x0 must lie in Supp(phi)");
  require(g.base()->icc_status().answer == Tri::Yes, ErrorCode::Precondition, "value conjugation needs D icc");
  return {x, FamilyKind::ValueConjugation, true, std::nullopt, x0};
}

namespace detail {

// g_d = (zeta_d^y, 1)^-1 (phi, q) (zeta_d^y, 1):
//   y not in Supp(phi):          (phi zeta_{d^-1}^y zeta_d^{qy}, q)
//   phi = phi0 zeta_c^y:         (phi0 zeta_{d^-1 c}^y zeta_d^{qy}, q)
inline WreathElement gd_closed_form(const WreathProduct& g, const WreathElement& x, const GroupElement& d,
                                    const OmegaPoint& y) {
  const Group& dg = *g.base();
  const OmegaPoint qy = g.omega()->apply(x.q, y);
  const auto zeta_at = [&](const OmegaPoint& p, const GroupElement& v) {
    return dg.is_identity(v) ? FinSuppMap{} : FinSuppMap{{{p, v}}};
  };
  const GroupElement c = map_value(dg, x.phi, y);
  FinSuppMap phi;
  if (dg.is_identity(c)) {
    phi = map_mul(dg, map_mul(dg, x.phi, zeta_at(y, dg.inv(d))), zeta_at(qy, d));
  } else {
    FinSuppMap phi0 = map_with(dg, x.phi, y, dg.identity());
    phi = map_mul(dg, map_mul(dg, phi0, zeta_at(y, dg.mul(dg.inv(d), c))), zeta_at(qy, d));
  }
  return {std::move(phi), x.q};
}

// (eps, k)^-1 (phi, q) (eps, k) = (lambda(k^-1)(phi), k^-1 q k)
inline WreathElement translation_closed_form(const WreathProduct& g, const WreathElement& x, const GroupElement& k) {
  const Group& q = *g.top();
  const GroupElement ki = q.inv(k);
  return {map_translate(*g.omega(), ki, x.phi), q.mul(q.mul(ki, x.q), k)};
}

inline std::string dedup_key(const WreathProduct& g, const InfiniteFamilyCertificate& cert,
                             const WreathElement& conj) {
  switch (cert.kind) {
    case FamilyKind::QTranslation:
      return g.top()->format(conj.q);
    case FamilyKind::LambdaTranslation: {
      std::string s;
      for (const auto& p : support(conj.phi)) s += g.omega()->format_point(p) + ",";
      return s;
    }
    case FamilyKind::ValueConjugation:
      return g.base()->format(map_value(*g.base(), conj.phi, *cert.point));
    case FamilyKind::Gd:
      break;
  }
  return {};
}

}  // namespace detail

// First `count` members of the (deduplicated) stream. Streams are stateless:
// every call restarts from index 0.
inline std::vector<FamilyMember> family_prefix(const WreathProduct& g, const InfiniteFamilyCertificate& cert,
                                               std::size_t count) {
  const bool over_q = cert.kind == FamilyKind::QTranslation || cert.kind == FamilyKind::LambdaTranslation;
  ElementStream stream(over_q ? g.top() : g.base());
  const GroupElement q1 = g.top()->identity();

  // Seeded families translate g' instead of g.
  WreathElement source = cert.base;
  WreathElement seed = g.identity();
  if (cert.seed_value) {
    seed = {FinSuppMap{{{*cert.point, *cert.seed_value}}}, q1};
    source = detail::gd_closed_form(g, cert.base, *cert.seed_value, *cert.point);
    const OmegaPoint qy = g.omega()->apply(cert.base.q, *cert.point);
    const Group& dg = *g.base();
    const FinSuppMap expected = detail::map_mul(dg, FinSuppMap{{{*cert.point, dg.inv(*cert.seed_value)}}},
                                                FinSuppMap{{{qy, *cert.seed_value}}});
    require(source.phi == expected && !source.phi.empty(), ErrorCode::Precondition,
            "seeded conjugate does not have phi = zeta_{d^-1}^y zeta_d^{qy} != eps");
  }

  std::vector<FamilyMember> out;
  std::unordered_set<std::string> seen;
  std::size_t gap = 0;
  std::size_t index = 0;
  while (out.size() < count) {
    auto e = stream.next();
    if (!e) {
      fail(ErrorCode::CertificateBudget, "enumeration ended after " + std::to_string(out.size()) +
                                             " members (finite group?)");
    }
    FamilyMember m;
    m.index = index++;
    switch (cert.kind) {
      case FamilyKind::QTranslation:
      case FamilyKind::LambdaTranslation:
        m.conjugator = detail::wr_mul(g, seed, WreathElement{FinSuppMap{}, *e});
        m.conjugate = detail::translation_closed_form(g, source, *e);
        break;
      case FamilyKind::Gd: {
        const auto& dv = *e;
        m.conjugator = {g.base()->is_identity(dv) ? FinSuppMap{} : FinSuppMap{{{*cert.point, dv}}}, q1};
        m.conjugate = detail::gd_closed_form(g, cert.base, dv, *cert.point);
        // Built-in self-check of the closed form.
        require(m.conjugate == detail::wr_conj(g, cert.base, m.conjugator), ErrorCode::Precondition,
                "g_d closed form disagrees with direct conjugation");
        break;
      }
      case FamilyKind::ValueConjugation: {
        const Group& dg = *g.base();
        const auto& ev = *e;
        m.conjugator = {dg.is_identity(ev) ? FinSuppMap{} : FinSuppMap{{{*cert.point, ev}}}, q1};
        const GroupElement v = map_value(dg, cert.base.phi, *cert.point);
        m.conjugate = {map_with(dg, cert.base.phi, *cert.point, dg.mul(dg.mul(dg.inv(ev), v), ev)), q1};
        break;
      }
    }
    if (cert.dedup && !seen.insert(detail::dedup_key(g, cert, m.conjugate)).second) {
      require(++gap <= cert.max_gap, ErrorCode::CertificateBudget,
              "no new member within " + std::to_string(cert.max_gap) + " candidates");
      continue;
    }
    gap = 0;
    out.push_back(std::move(m));
  }
  return out;
}

// --- dispatcher ----------------------------------------------------------------

// Picks the certificate from the conditions that decide the verdict.
inline Certificate witness(const WreathProduct& g, const IccVerdict& verdict,
                           const std::optional<WreathElement>& element = std::nullopt) {
  require(verdict.answer != Tri::Unknown, ErrorCode::UnknownVerdict, "no certificate for an Unknown verdict");
  if (verdict.answer == Tri::No) {
    if (verdict.cond_i == Tri::No) {
      require(verdict.q0.has_value(), ErrorCode::Precondition, "verdict lacks the kernel element q0");
      return cert_condition_i(g, *verdict.q0);
    }
    auto seed = g.omega()->finite_orbit_seed();
    require(seed.has_value(), ErrorCode::Precondition, "no finite orbit available");
    const auto orbit = orbit_bounded(*g.omega(), *seed, 1'000'000);
    return cert_finite_orbit(g, finite_invariant_set_example(g.base()), orbit);
  }

  require(element.has_value(), ErrorCode::Precondition, "an icc certificate needs an element g");
  const WreathElement& x = *element;
  check_element(g, x);
  require(!g.is_identity(x), ErrorCode::Precondition, "g must be nontrivial");

  if (!g.top()->fc_member(x.q)) return family_q_translation(g, x);
  if (verdict.cond_iii == Tri::Yes) {
    if (!x.phi.empty()) return family_lambda_translation(g, x);
    const OmegaPoint y = find_moved_point(g, x.q);
    return family_seeded_translation(g, x, first_nonidentity(g.base()), y);
  }
  if (verdict.cond_ii == Tri::Yes) {
    if (!g.top()->is_identity(x.q)) return family_gd(g, x, find_moved_point(g, x.q));
    return family_value_conjugation(g, x, x.phi.entries.front().first);
  }
  fail(ErrorCode::Precondition, "verdict Yes without condition (ii) or (iii)");
}

// --- verification --------------------------------------------------------------

struct VerifyReport {
  bool ok = true;
  std::string reason;
  std::optional<WreathElement> member;      // offending member
  std::optional<WreathElement> conjugator;  // offending conjugator
  std::optional<WreathElement> image;       // its image outside the set / duplicate

  explicit operator bool() const { return ok; }
};

// Random words of length 1..radius over the generators of G and their inverses.
inline std::vector<WreathElement> sample_conjugators(const WreathProduct& g, std::size_t radius, std::size_t count,
                                                     std::uint64_t seed) {
  std::vector<WreathElement> steps;
  for (const auto& s : g.generators()) {
    steps.push_back(s);
    steps.push_back(detail::wr_inv(g, s));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(radius, 1));
  std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
  std::vector<WreathElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    WreathElement h = g.identity();
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) h = detail::wr_mul(g, h, steps[pick(rng)]);
    out.push_back(std::move(h));
  }
  return out;
}

inline VerifyReport verify_finite_certificate(const WreathProduct& g, const FiniteClassCertificate& cert,
                                              std::size_t sample_radius, std::size_t sample_count,
                                              std::uint64_t seed) {
  VerifyReport r;
  if (cert.members.empty()) return {false, "empty set", std::nullopt, std::nullopt, std::nullopt};
  std::unordered_set<WreathElement, Hash> set(cert.members.begin(), cert.members.end());
  if (!set.count(cert.base)) return {false, "base element not in S", cert.base, std::nullopt, std::nullopt};
  for (const auto& s : cert.members) {
    if (!g.is_valid(s)) return {false, "member is not a valid element of G", s, std::nullopt, std::nullopt};
    if (g.is_identity(s)) return {false, "S contains the identity", s, std::nullopt, std::nullopt};
  }
  for (const auto& h : sample_conjugators(g, sample_radius, sample_count, seed)) {
    for (const auto& s : cert.members) {
      WreathElement img = detail::wr_conj(g, s, h);
      if (!set.count(img)) return {false, "conjugate escapes S", s, h, std::move(img)};
    }
  }
  r.reason = "closed under " + std::to_string(sample_count) + " sampled conjugators";
  return r;
}

// Closure under every generator of G and its inverse. For finite G (or a
// window meeting every orbit) this is invariance under all of G.
inline VerifyReport verify_finite_closure(const WreathProduct& g, const FiniteClassCertificate& cert) {
  std::unordered_set<WreathElement, Hash> set(cert.members.begin(), cert.members.end());
  for (const auto& s0 : g.generators()) {
    for (const auto& h : {s0, detail::wr_inv(g, s0)}) {
      for (const auto& s : cert.members) {
        WreathElement img = detail::wr_conj(g, s, h);
        if (!set.count(img)) return {false, "conjugate escapes S", s, h, std::move(img)};
      }
    }
  }
  return {true, "closed under all generators", std::nullopt, std::nullopt, std::nullopt};
}

inline VerifyReport verify_family_members(const WreathProduct& g, const WreathElement& base,
                                          const std::vector<FamilyMember>& members) {
  std::unordered_set<WreathElement, Hash> seen;
  for (const auto& m : members) {
    WreathElement direct = wr_conjugate(g, base, m.conjugator);
    if (!(direct == m.conjugate))
      return {false, "member " + std::to_string(m.index) + " is not base^h for its recorded h", m.conjugate,
              m.conjugator, std::move(direct)};
    if (!seen.insert(m.conjugate).second)
      return {false, "member " + std::to_string(m.index) + " repeats an earlier conjugate", m.conjugate,
              m.conjugator, std::nullopt};
  }
  return {true, std::to_string(members.size()) + " pairwise distinct verified conjugates", std::nullopt,
          std::nullopt, std::nullopt};
}

inline VerifyReport verify_infinite_certificate(const WreathProduct& g, const InfiniteFamilyCertificate& cert,
                                                std::size_t n) {
  require(n >= 2, ErrorCode::Precondition, "distinctness needs a prefix of at least 2");
  std::vector<FamilyMember> members;
  try {
    members = family_prefix(g, cert, n);
  } catch (const Error& e) {
    return {false, std::string("stream exhausted: ") + e.what(), std::nullopt, std::nullopt, std::nullopt};
  }
  return verify_family_members(g, cert.base, members);
}

}  // namespace wricc
