#pragma once

// Seeded random elements of G for property checks and cross-validation.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "element.hpp"
#include "group.hpp"
#include "wreath.hpp"

namespace wricc {

struct SampleShape {
  std::size_t max_support = 3;
  std::size_t point_pool = 12;  // points drawn from the first N of Omega
  std::size_t value_pool = 24;  // D values from the first N of its ball
  std::size_t top_pool = 24;    // Q parts from the first N of its ball
};

class ElementSampler {
 public:
  ElementSampler(const WreathProduct& g, std::uint64_t seed, SampleShape shape = {})
      : g_(g),
        rng_(seed),
        shape_(shape),
        points_(g.omega()->points_prefix(shape.point_pool)),
        values_(ball_prefix(g.base(), shape.value_pool)),
        tops_(ball_prefix(g.top(), shape.top_pool)) {}

  WreathElement next() {
    std::uniform_int_distribution<std::size_t> support_size(0, std::min(shape_.max_support, points_.size()));
    const std::size_t k = support_size(rng_);
    std::vector<OmegaPoint> pts = points_;
    std::shuffle(pts.begin(), pts.end(), rng_);
    FinSuppMap phi;
    for (std::size_t i = 0; i < k; ++i) phi.entries.emplace_back(pts[i], pick(values_));
    detail::canonicalize(*g_.base(), phi);
    return {std::move(phi), pick(tops_)};
  }

  WreathElement next_nontrivial() {
    while (true) {
      WreathElement x = next();
      if (!g_.is_identity(x)) return x;
    }
  }

  OmegaPoint point() { return pick(points_); }
  GroupElement value() { return pick(values_); }
  GroupElement top() { return pick(tops_); }

  std::mt19937_64& rng() { return rng_; }

 private:
  template <typename T>
  T pick(const std::vector<T>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng_)];
  }

  const WreathProduct& g_;
  std::mt19937_64 rng_;
  SampleShape shape_;
  std::vector<OmegaPoint> points_;
  std::vector<GroupElement> values_;
  std::vector<GroupElement> tops_;
};

}  // namespace wricc
