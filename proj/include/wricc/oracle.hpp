#pragma once

// Brute-force conjugacy-class explorer in G, independent of the criterion and
// of the certificate constructions: rounds of conjugation by the generators of
// G (and their inverses), deduplicated by canonical form.

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "wreath.hpp"

namespace wricc {

enum class WreathClassStatus { ExactFiniteUnderGens, AtLeast };

constexpr std::string_view to_string(WreathClassStatus s) {
  return s == WreathClassStatus::ExactFiniteUnderGens ? "ExactFiniteUnderGens" : "AtLeast";
}

struct WreathClassReport {
  WreathClassStatus status = WreathClassStatus::AtLeast;
  std::vector<WreathElement> elements;  // sorted, each a verified conjugate
  std::size_t radius_used = 0;
  std::vector<OmegaPoint> window;

  std::size_t count() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultOracleRadius = 8;
inline constexpr std::size_t kDefaultOracleMaxSize = 10000;

inline WreathClassReport enumerate_class(const WreathProduct& g, const WreathElement& x,
                                         std::size_t radius = kDefaultOracleRadius,
                                         std::size_t max_size = kDefaultOracleMaxSize) {
  require(radius > 0 && max_size > 0, ErrorCode::ZeroBudget, "oracle budgets must be positive");
  check_element(g, x);

  std::vector<WreathElement> steps;
  for (const auto& s : g.generators()) {
    steps.push_back(s);
    steps.push_back(detail::wr_inv(g, s));
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  // element -> a conjugator producing it
  std::unordered_map<WreathElement, WreathElement, Hash> found{{x, g.identity()}};
  std::vector<WreathElement> frontier{x};
  std::size_t round = 0;
  bool capped = false;
  while (!frontier.empty() && round < radius && !capped) {
    ++round;
    std::vector<WreathElement> next;
    for (const auto& y : frontier) {
      const WreathElement& hy = found.at(y);
      for (const auto& s : steps) {
        WreathElement z = detail::wr_conj(g, y, s);
        if (found.count(z)) continue;
        WreathElement h = detail::wr_mul(g, hy, s);
        // Re-derive from x directly before accepting.
        require(detail::wr_conj(g, x, h) == z, ErrorCode::Precondition, "oracle conjugator check failed");
        found.emplace(z, std::move(h));
        next.push_back(std::move(z));
        if (found.size() >= max_size) {
          capped = true;
          break;
        }
      }
      if (capped) break;
    }
    // Deterministic frontier order regardless of hash layout.
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  WreathClassReport report;
  report.radius_used = round;
  report.window = g.window();
  report.status = !capped && frontier.empty() ? WreathClassStatus::ExactFiniteUnderGens : WreathClassStatus::AtLeast;
  report.elements.reserve(found.size());
  for (auto& kv : found) report.elements.push_back(kv.first);
  std::sort(report.elements.begin(), report.elements.end());
  return report;
}

}  // namespace wricc
