#pragma once

// Instance files: a JSON object naming D, Q and Omega by catalog kind, with an
// optional generator window and budgets.
//
//   {
//     "name": "lamplighter",
//     "D": "cyclic 2",
//     "Q": "integers",
//     "omega": "regular",
//     "window": ["0"],
//     "budgets": {"radius": 8, "max_size": 10000}
//   }
//
// Group descriptors are strings ("integers", "cyclic N", "symmetric N",
// "free N", "trivial") or objects with a "kind" field (adding
// "finite-cayley", "direct-product" and, in the D position only, "wreath").
// Omega descriptors are "regular", "natural", "trivial K", "int-mod N" or
// objects ("explicit" with per-generator "actions", "union" with "parts").

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "group.hpp"
#include "nested.hpp"
#include "qset.hpp"
#include "wreath.hpp"

namespace wricc {

struct Budgets {
  std::size_t radius = 8;          // oracle conjugation rounds
  std::size_t max_size = 10000;    // oracle class cap
  std::size_t sample_radius = 3;   // finite-certificate conjugator length
  std::size_t samples = 500;       // finite-certificate conjugators
  std::size_t prefix = 100;        // infinite-certificate prefix
  std::size_t elements = 20;       // sampled elements for icc checks
  std::uint64_t seed = 42;
};

struct InstanceSpec {
  std::string name;
  nlohmann::json source;
  GroupHandle d;
  GroupHandle q;
  QSetHandle omega;
  std::vector<OmegaPoint> window;
  Budgets budgets;
  WreathHandle product;
  std::string hash;
};

namespace detail {

inline std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::int64_t int_field(const nlohmann::json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    fail(ErrorCode::InvalidInstance, path + "." + key + ": expected an integer");
  return j.at(key).get<std::int64_t>();
}

inline std::int64_t int_word(const std::vector<std::string>& w, const std::string& path) {
  if (w.size() != 2) fail(ErrorCode::InvalidInstance, path + ": expected '<kind> <integer>'");
  try {
    return literal::parse_int(w[1]);
  } catch (const Error&) {
    fail(ErrorCode::InvalidInstance, path + ": '" + w[1] + "' is not an integer");
  }
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// FNV-1a over the canonical JSON dump.
inline std::string instance_hash(const nlohmann::json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

QSetHandle parse_omega(const nlohmann::json& j, const GroupHandle& q, const std::string& path);

inline GroupHandle parse_group(const nlohmann::json& j, bool allow_wreath, const std::string& path) {
  if (j.is_string()) {
    const auto w = words(j.get<std::string>());
    if (w.empty()) fail(ErrorCode::UnknownKind, path + ": empty group descriptor");
    const std::string& kind = w[0];
    if (kind == "integers" && w.size() == 1) return make_integers();
    if (kind == "trivial" && w.size() == 1) return make_cyclic(1);
    if (kind == "cyclic") return make_cyclic(int_word(w, path));
    if (kind == "symmetric") return make_symmetric(static_cast<std::size_t>(int_word(w, path)));
    if (kind == "free") return make_free(static_cast<int>(int_word(w, path)));
    if (kind == "wreath") {
      if (!allow_wreath) fail(ErrorCode::UnsupportedQKind, path + ": wreath products are only allowed as D");
      fail(ErrorCode::InvalidInstance, path + ": wreath descriptors must be objects");
    }
    fail(ErrorCode::UnknownKind, path + ": unknown group kind '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(ErrorCode::InvalidInstance, path + ": group descriptor must be a string or an object with \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integers") return make_integers();
  if (kind == "trivial") return make_cyclic(1);
  if (kind == "cyclic") return make_cyclic(int_field(j, "n", path));
  if (kind == "symmetric") return make_symmetric(static_cast<std::size_t>(int_field(j, "n", path)));
  if (kind == "free") return make_free(static_cast<int>(int_field(j, "rank", path)));
  if (kind == "finite-cayley") {
    if (!j.contains("table")) fail(ErrorCode::InvalidInstance, path + ".table: missing");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<int> gens;
    if (j.contains("generators")) gens = j.at("generators").get<std::vector<int>>();
    return make_finite_cayley(std::move(table), std::move(gens));
  }
  if (kind == "direct-product") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      fail(ErrorCode::InvalidInstance, path + ".factors: expected an array");
    std::vector<GroupHandle> factors;
    for (std::size_t i = 0; i < j.at("factors").size(); ++i)
      factors.push_back(parse_group(j.at("factors")[i], allow_wreath, path + ".factors[" + std::to_string(i) + "]"));
    return make_direct_product(std::move(factors));
  }
  if (kind == "wreath") {
    if (!allow_wreath) fail(ErrorCode::UnsupportedQKind, path + ": wreath products are only allowed as D");
    for (const char* key : {"D", "Q", "omega"})
      if (!j.contains(key)) fail(ErrorCode::InvalidInstance, path + "." + key + ": missing");
    GroupHandle d = parse_group(j.at("D"), true, path + ".D");
    GroupHandle q = parse_group(j.at("Q"), false, path + ".Q");
    QSetHandle omega = parse_omega(j.at("omega"), q, path + ".omega");
    std::vector<OmegaPoint> window;
    if (j.contains("window"))
      for (const auto& p : j.at("window")) window.push_back(omega->parse_point(p.get<std::string>()));
    return make_nested(make_wreath(std::move(d), std::move(omega), std::move(window)));
  }
  fail(ErrorCode::UnknownKind, path + ": unknown group kind '" + kind + "'");
}

inline QSetHandle parse_omega(const nlohmann::json& j, const GroupHandle& q, const std::string& path) {
  QSetHandle out;
  if (j.is_string()) {
    const auto w = words(j.get<std::string>());
    if (w.empty()) fail(ErrorCode::UnknownKind, path + ": empty omega descriptor");
    if (w[0] == "regular" && w.size() == 1) {
      out = make_regular(q);
    } else if (w[0] == "natural" && w.size() == 1) {
      out = make_natural(q);
    } else if (w[0] == "trivial") {
      out = make_trivial_qset(q, static_cast<std::size_t>(std::max<std::int64_t>(0, int_word(w, path))));
    } else if (w[0] == "int-mod") {
      out = make_int_mod(q, int_word(w, path));
    } else {
      fail(ErrorCode::UnknownKind, path + ": unknown omega kind '" + j.get<std::string>() + "'");
    }
  } else {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
      fail(ErrorCode::InvalidInstance, path + ": omega descriptor must be a string or an object with \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "regular") {
      out = make_regular(q);
    } else if (kind == "natural") {
      out = make_natural(q);
    } else if (kind == "trivial") {
      out = make_trivial_qset(q, static_cast<std::size_t>(std::max<std::int64_t>(0, int_field(j, "size", path))));
    } else if (kind == "int-mod") {
      out = make_int_mod(q, int_field(j, "n", path));
    } else if (kind == "explicit") {
      const auto size = int_field(j, "size", path);
      require(size >= 0, ErrorCode::InvalidInstance, path + ".size: must be >= 0");
      if (!j.contains("actions")) fail(ErrorCode::InvalidInstance, path + ".actions: missing");
      out = make_explicit(q, static_cast<std::size_t>(size), j.at("actions").get<std::vector<std::vector<int>>>());
    } else if (kind == "union") {
      if (!j.contains("parts") || !j.at("parts").is_array())
        fail(ErrorCode::InvalidInstance, path + ".parts: expected an array");
      std::vector<QSetHandle> parts;
      for (std::size_t i = 0; i < j.at("parts").size(); ++i)
        parts.push_back(parse_omega(j.at("parts")[i], q, path + ".parts[" + std::to_string(i) + "]"));
      out = make_union(std::move(parts));
    } else {
      fail(ErrorCode::UnknownKind, path + ": unknown omega kind '" + kind + "'");
    }
  }
  if (auto n = out->size(); n && *n == 0) fail(ErrorCode::EmptyOmega, path + ": Omega is empty");
  return out;
}

}  // namespace detail

inline InstanceSpec parse_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInstance, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::InvalidInstance, "instance must be a JSON object");
  for (const char* key : {"D", "Q", "omega"})
    if (!j.contains(key)) fail(ErrorCode::InvalidInstance, std::string(key) + ": missing");

  InstanceSpec spec;
  spec.source = j;
  spec.hash = detail::instance_hash(j);
  spec.name = j.value("name", std::string("instance"));
  try {
    spec.q = detail::parse_group(j.at("Q"), false, "Q");
    spec.d = detail::parse_group(j.at("D"), true, "D");
    spec.omega = detail::parse_omega(j.at("omega"), spec.q, "omega");
    if (spec.d->is_trivial()) fail(ErrorCode::TrivialD, "D: the criterion requires D != {1}");
    if (j.contains("window")) {
      if (!j.at("window").is_array()) fail(ErrorCode::InvalidInstance, "window: expected an array of point literals");
      for (const auto& p : j.at("window")) {
        if (!p.is_string()) fail(ErrorCode::InvalidInstance, "window: point literals must be strings");
        spec.window.push_back(spec.omega->parse_point(p.get<std::string>()));
      }
    }
    if (j.contains("budgets")) {
      const auto& b = j.at("budgets");
      spec.budgets.radius = b.value("radius", spec.budgets.radius);
      spec.budgets.max_size = b.value("max_size", spec.budgets.max_size);
      spec.budgets.sample_radius = b.value("sample_radius", spec.budgets.sample_radius);
      spec.budgets.samples = b.value("samples", spec.budgets.samples);
      spec.budgets.prefix = b.value("prefix", spec.budgets.prefix);
      spec.budgets.elements = b.value("elements", spec.budgets.elements);
      spec.budgets.seed = b.value("seed", spec.budgets.seed);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInstance, e.what());
  }
  spec.product = make_wreath(spec.d, spec.omega, spec.window);
  return spec;
}

}  // namespace wricc
