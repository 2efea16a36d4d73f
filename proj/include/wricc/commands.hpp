#pragma once

// Front-ends behind the command-line tool. Each command builds one record;
// the human-readable text is rendered from that same record.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decision.hpp"
#include "error.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "sampling.hpp"
#include "witness.hpp"

namespace wricc {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUnknown = 2, kExitUsage = 3 };

struct CommandResult {
  nlohmann::json record;
  int exit_code = kExitOk;
};

namespace detail {

inline nlohmann::json budgets_json(const Budgets& b) {
  return {{"radius", b.radius},   {"max_size", b.max_size}, {"sample_radius", b.sample_radius},
          {"samples", b.samples}, {"prefix", b.prefix},     {"elements", b.elements}};
}

inline nlohmann::json base_record(const std::string& command, const InstanceSpec& spec) {
  return {{"command", command},
          {"instance", spec.name},
          {"instance_hash", spec.hash},
          {"budgets", budgets_json(spec.budgets)},
          {"seed", spec.budgets.seed}};
}

inline nlohmann::json verdict_json(const IccVerdict& v) {
  return {{"answer", to_string(v.answer)},   {"cond_i", to_string(v.cond_i)},
          {"cond_ii", to_string(v.cond_ii)}, {"cond_iii", to_string(v.cond_iii)},
          {"corollary_used", v.corollary_used}, {"reason", v.reason}};
}

inline constexpr std::size_t kListCap = 50;

inline nlohmann::json finite_cert_json(const WreathProduct& g, const FiniteClassCertificate& c) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < c.members.size() && i < kListCap; ++i) members.push_back(g.format(c.members[i]));
  return {{"type", "finite"},
          {"provenance", to_string(c.provenance)},
          {"base", g.format(c.base)},
          {"size", c.members.size()},
          {"predicted_size", c.predicted_size},
          {"size_formula", c.size_formula},
          {"members", members},
          {"members_truncated", c.members.size() > kListCap}};
}

inline nlohmann::json family_json(const WreathProduct& g, const InfiniteFamilyCertificate& c,
                                  const std::vector<FamilyMember>& shown) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : shown)
    members.push_back({{"index", m.index}, {"conjugator", g.format(m.conjugator)}, {"conjugate", g.format(m.conjugate)}});
  nlohmann::json out = {{"type", "infinite"},
                        {"family", to_string(c.kind)},
                        {"base", g.format(c.base)},
                        {"dedup", c.dedup},
                        {"members", members}};
  if (c.point) out["point"] = g.omega()->format_point(*c.point);
  if (c.seed_value) out["seed_value"] = g.base()->format(*c.seed_value);
  return out;
}

inline void add_check(nlohmann::json& checks, const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
}

}  // namespace detail

inline CommandResult cmd_decide(const InstanceSpec& spec) {
  const auto& g = *spec.product;
  CommandResult out;
  out.record = detail::base_record("decide", spec);
  const auto v = decide_icc(g);
  out.record["verdict"] = detail::verdict_json(v);
  out.record["free_action"] = to_string(is_free_action(*g.omega()));
  if (is_free_action(*g.omega()) == Tri::Yes) {
    out.record["corollary"] = detail::verdict_json(decide_icc_free(g));
  }
  out.exit_code = v.answer == Tri::Unknown ? kExitUnknown : kExitOk;
  return out;
}

// Default element for icc certificates: the first nontrivial generator of G.
inline WreathElement default_element(const WreathProduct& g) {
  for (const auto& s : g.generators())
    if (!g.is_identity(s)) return s;
  fail(ErrorCode::Precondition, "G has no nontrivial generator");
}

inline CommandResult cmd_witness(const InstanceSpec& spec, const std::optional<std::string>& element) {
  const auto& g = *spec.product;
  CommandResult out;
  out.record = detail::base_record("witness", spec);
  const auto v = decide_icc(g);
  out.record["verdict"] = detail::verdict_json(v);
  if (v.answer == Tri::Unknown) {
    out.exit_code = kExitUnknown;
    return out;
  }
  std::optional<WreathElement> x;
  if (element) x = g.parse(*element);
  if (v.answer == Tri::Yes && !x) x = default_element(g);
  const auto cert = witness(g, v, x);
  if (const auto* fin = std::get_if<FiniteClassCertificate>(&cert)) {
    out.record["certificate"] = detail::finite_cert_json(g, *fin);
    const auto r = verify_finite_certificate(g, *fin, spec.budgets.sample_radius, spec.budgets.samples,
                                             spec.budgets.seed);
    out.record["verified"] = r.ok;
    out.record["verification"] = r.reason;
    out.exit_code = r.ok ? kExitOk : kExitFail;
  } else {
    const auto& fam = std::get<InfiniteFamilyCertificate>(cert);
    const auto members = family_prefix(g, fam, spec.budgets.prefix);
    std::vector<FamilyMember> shown(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(
                                                                          std::min<std::size_t>(10, members.size())));
    out.record["certificate"] = detail::family_json(g, fam, shown);
    const auto r = verify_family_members(g, fam.base, members);
    out.record["verified"] = r.ok;
    out.record["verification"] = r.reason;
    out.exit_code = r.ok ? kExitOk : kExitFail;
  }
  return out;
}

inline CommandResult cmd_class(const InstanceSpec& spec, const std::string& element, std::size_t radius,
                               std::size_t max_size) {
  const auto& g = *spec.product;
  CommandResult out;
  out.record = detail::base_record("class", spec);
  out.record["budgets"]["radius"] = radius;
  out.record["budgets"]["max_size"] = max_size;
  const WreathElement x = g.parse(element);
  const auto r = enumerate_class(g, x, radius, max_size);
  nlohmann::json elems = nlohmann::json::array();
  for (std::size_t i = 0; i < r.elements.size() && i < detail::kListCap; ++i) elems.push_back(g.format(r.elements[i]));
  nlohmann::json window = nlohmann::json::array();
  for (const auto& w : r.window) window.push_back(g.omega()->format_point(w));
  out.record["element"] = g.format(x);
  out.record["report"] = {{"status", to_string(r.status)}, {"count", r.count()},         {"radius_used", r.radius_used},
                          {"window", window},                {"elements", elems}, {"elements_truncated", r.count() > detail::kListCap}};
  return out;
}

// Full cross-check: verdict, corollary agreement, certificates, oracle.
inline CommandResult cmd_verify(const InstanceSpec& spec, std::uint64_t seed, std::size_t samples) {
  const auto& g = *spec.product;
  const auto& b = spec.budgets;
  CommandResult out;
  out.record = detail::base_record("verify", spec);
  out.record["seed"] = seed;
  out.record["budgets"]["samples"] = samples;
  nlohmann::json checks = nlohmann::json::array();

  const auto v = decide_icc(g);
  out.record["verdict"] = detail::verdict_json(v);
  if (v.answer == Tri::Unknown) {
    out.record["checks"] = checks;
    out.exit_code = kExitUnknown;
    return out;
  }

  if (is_free_action(*g.omega()) == Tri::Yes) {
    const auto f = decide_icc_free(g);
    detail::add_check(checks, "corollary-agreement", f.answer == v.answer,
                      "free-action answer " + std::string(to_string(f.answer)));
  }

  if (v.answer == Tri::No) {
    try {
      const auto cert = std::get<FiniteClassCertificate>(witness(g, v));
      out.record["certificate"] = detail::finite_cert_json(g, cert);
      detail::add_check(checks, "certificate-size", cert.members.size() == cert.predicted_size,
                        std::to_string(cert.members.size()) + " vs " + cert.size_formula);
      const auto r = verify_finite_certificate(g, cert, b.sample_radius, samples, seed);
      detail::add_check(checks, "certificate-invariance", r.ok,
                        r.ok ? r.reason : r.reason + " at " + g.format(*r.member));
      const auto cls = enumerate_class(g, cert.base, b.radius, b.max_size);
      bool inside = cls.status == WreathClassStatus::ExactFiniteUnderGens;
      for (const auto& e : cls.elements) inside = inside && cert.contains(e);
      detail::add_check(checks, "oracle-class-inside-certificate", inside,
                        std::string(to_string(cls.status)) + ", " + std::to_string(cls.count()) + " elements");
    } catch (const Error& e) {
      detail::add_check(checks, "certificate", false, e.what());
    }
  } else {
    ElementSampler sampler(g, seed);
    for (std::size_t i = 0; i < b.elements; ++i) {
      const WreathElement x = sampler.next_nontrivial();
      const std::string label = g.format(x);
      try {
        const auto fam = std::get<InfiniteFamilyCertificate>(witness(g, v, x));
        const auto r = verify_infinite_certificate(g, fam, b.prefix);
        detail::add_check(checks, "family " + label, r.ok, std::string(to_string(fam.kind)) + ": " + r.reason);
      } catch (const Error& e) {
        detail::add_check(checks, "family " + label, false, e.what());
      }
      const auto cls = enumerate_class(g, x, b.radius, b.max_size);
      detail::add_check(checks, "oracle " + label, cls.status == WreathClassStatus::AtLeast,
                        std::string(to_string(cls.status)) + " " + std::to_string(cls.count()));
    }
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.at("pass").get<bool>();
  out.record["checks"] = checks;
  out.record["result"] = all ? "PASS" : "FAIL";
  out.exit_code = all ? kExitOk : kExitFail;
  return out;
}

// Human-readable rendering of a command record.
inline std::string render_human(const nlohmann::json& r) {
  std::string s = r.at("command").get<std::string>() + " " + r.at("instance").get<std::string>() + " [" +
                  r.at("instance_hash").get<std::string>() + "]\n";
  if (r.contains("verdict")) {
    const auto& v = r.at("verdict");
    s += "  icc: " + v.at("answer").get<std::string>() + "  (i) " + v.at("cond_i").get<std::string>() + "  (ii) " +
         v.at("cond_ii").get<std::string>() + "  (iii) " + v.at("cond_iii").get<std::string>() + "\n";
    s += "  reason: " + v.at("reason").get<std::string>() + "\n";
  }
  if (r.contains("corollary"))
    s += "  free action, corollary answer: " + r.at("corollary").at("answer").get<std::string>() + "\n";
  if (r.contains("certificate")) {
    const auto& c = r.at("certificate");
    if (c.at("type") == "finite") {
      s += "  finite invariant set (" + c.at("provenance").get<std::string>() + "), size " +
           std::to_string(c.at("size").get<std::size_t>()) + ", " + c.at("size_formula").get<std::string>() + "\n";
      s += "  base " + c.at("base").get<std::string>() + "\n";
      for (const auto& m : c.at("members")) s += "    " + m.get<std::string>() + "\n";
    } else {
      s += "  infinite family (" + c.at("family").get<std::string>() + ") of " + c.at("base").get<std::string>() + "\n";
      for (const auto& m : c.at("members"))
        s += "    h" + std::to_string(m.at("index").get<std::size_t>()) + " = " + m.at("conjugator").get<std::string>() +
             "  ->  " + m.at("conjugate").get<std::string>() + "\n";
    }
  }
  if (r.contains("verification"))
    s += std::string("  verified: ") + (r.at("verified").get<bool>() ? "yes" : "NO") + " (" +
         r.at("verification").get<std::string>() + ")\n";
  if (r.contains("report")) {
    const auto& rep = r.at("report");
    s += "  class of " + r.at("element").get<std::string>() + ": " + rep.at("status").get<std::string>() + " " +
         std::to_string(rep.at("count").get<std::size_t>()) + " (radius " +
         std::to_string(rep.at("radius_used").get<std::size_t>()) + ")\n";
    for (const auto& e : rep.at("elements")) s += "    " + e.get<std::string>() + "\n";
  }
  if (r.contains("checks")) {
    for (const auto& c : r.at("checks"))
      s += std::string("  ") + (c.at("pass").get<bool>() ? "PASS " : "FAIL ") + c.at("check").get<std::string>() +
           ": " + c.at("detail").get<std::string>() + "\n";
  }
  if (r.contains("result")) s += "  result: " + r.at("result").get<std::string>() + "\n";
  return s;
}

}  // namespace wricc
