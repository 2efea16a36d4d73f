#pragma once

// The icc criterion for G = D wr_Omega Q with D != {1}: G is icc iff
//   (i)   1 is the only element of FC(Q) fixing Omega pointwise, and
//   (ii)  D is icc, or (iii) every Q-orbit in Omega is infinite.
// For a free action this reduces to: D is icc or Q is infinite.

#include <optional>
#include <string>

#include "error.hpp"
#include "group.hpp"
#include "qset.hpp"
#include "tristate.hpp"
#include "wreath.hpp"

namespace wricc {

struct IccVerdict {
  Tri answer = Tri::Unknown;
  Tri cond_i = Tri::Unknown;
  Tri cond_ii = Tri::Unknown;
  Tri cond_iii = Tri::Unknown;
  std::string reason;
  bool corollary_used = false;
  // Nontrivial FC element fixing Omega pointwise, when cond_i == No.
  std::optional<GroupElement> q0;
};

namespace detail {

inline void check_hypotheses(const WreathProduct& g) {
  require(!g.base()->is_trivial(), ErrorCode::TrivialD, "the criterion assumes D != {1} (G would be Q)");
  auto n = g.omega()->size();
  require(!n || *n > 0, ErrorCode::EmptyOmega, "the criterion assumes a nonempty Q-set (G would be Q)");
}

}  // namespace detail

inline IccVerdict decide_icc(const WreathProduct& g) {
  detail::check_hypotheses(g);
  const auto kernel = kernel_meets_fc(*g.omega());
  const auto d_status = g.base()->icc_status();

  IccVerdict v;
  v.cond_i = !kernel.answer;
  v.cond_ii = d_status.answer;
  v.cond_iii = all_orbits_infinite(*g.omega());
  v.answer = v.cond_i && (v.cond_ii || v.cond_iii);
  v.q0 = kernel.q0;

  std::string conds = "(i) " + std::string(to_string(v.cond_i)) + " [" + kernel.reason + "]; (ii) " +
                      std::string(to_string(v.cond_ii)) + " [" + d_status.justification + "]; (iii) " +
                      std::string(to_string(v.cond_iii));
  switch (v.answer) {
    case Tri::Yes:
      v.reason = "icc: condition (i) holds and " +
                 std::string(v.cond_ii == Tri::Yes ? "D is icc" : "all Q-orbits are infinite") + "; " + conds;
      break;
    case Tri::No:
      v.reason = std::string(v.cond_i == Tri::No ? "not icc: a nontrivial FC(Q) element fixes Omega pointwise"
                                                 : "not icc: D is not icc and some Q-orbit is finite") +
                 "; " + conds;
      break;
    default:
      v.reason = "undetermined: " + conds;
      break;
  }
  return v;
}

// Free actions: icc iff D is icc or Q is infinite.
inline IccVerdict decide_icc_free(const WreathProduct& g) {
  detail::check_hypotheses(g);
  const Tri free = is_free_action(*g.omega());
  require(free == Tri::Yes, ErrorCode::NotFreeAction,
          "action of " + g.top()->name() + " on " + g.omega()->name() + " is not known to be free");
  const auto d_status = g.base()->icc_status();
  const Tri q_infinite = from_bool(!g.top()->is_finite());

  IccVerdict v;
  v.corollary_used = true;
  v.cond_i = Tri::Yes;  // a free action has trivial kernel
  v.cond_ii = d_status.answer;
  v.cond_iii = q_infinite;  // orbits of a free action are copies of Q
  v.answer = v.cond_ii || q_infinite;
  v.reason = "free action: D icc " + std::string(to_string(v.cond_ii)) + ", Q infinite " +
             std::string(to_string(q_infinite));
  return v;
}

}  // namespace wricc
