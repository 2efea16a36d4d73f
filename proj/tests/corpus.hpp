#pragma once

// Instances shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include <wricc/wricc.hpp>

namespace wricc::corpus {

struct Instance {
  std::string name;
  WreathHandle g;
};

inline GroupElement perm(std::vector<int> images) { return Perm{std::move(images)}; }
inline GroupElement word(std::vector<int> letters) { return Word{std::move(letters)}; }
inline OmegaPoint pt(std::int64_t x) { return OmegaPoint(x); }
inline OmegaPoint qpt(GroupElement q) { return OmegaPoint(std::move(q)); }
inline OmegaPoint upt(std::size_t part, std::variant<std::int64_t, GroupElement> v) { return OmegaPoint(part, std::move(v)); }

// Z2 wr Z, Omega = Z regular.
inline WreathHandle lamplighter() { return make_wreath(make_cyclic(2), make_regular(make_integers())); }

// F2 wr Z2, Z2 swapping two points (finite-explicit table).
inline WreathHandle f2_swap() {
  auto q = make_cyclic(2);
  return make_wreath(make_free(2), make_explicit(q, 2, {{1, 0}}));
}

// Z2 over a trivial one-point Omega with Q = Z.
inline WreathHandle z2_trivial_omega() { return make_wreath(make_cyclic(2), make_trivial_qset(make_integers(), 1)); }

inline QSetHandle regular_plus_intmod3() {
  auto z = make_integers();
  return make_union({make_regular(z), make_int_mod(z, 3)});
}

inline WreathHandle z2_mixed() { return make_wreath(make_cyclic(2), regular_plus_intmod3()); }
inline WreathHandle f2_mixed() { return make_wreath(make_free(2), regular_plus_intmod3()); }

inline WreathHandle s3_wr_s3() {
  auto s3 = make_symmetric(3);
  return make_wreath(make_symmetric(3), make_natural(s3));
}

inline WreathHandle z2_wr_s3() {
  auto s3 = make_symmetric(3);
  return make_wreath(make_cyclic(2), make_natural(s3));
}

inline WreathHandle s3_over_intmod3() { return make_wreath(make_symmetric(3), make_int_mod(make_integers(), 3)); }

inline WreathHandle f2_wr_z3_regular() { return make_wreath(make_free(2), make_regular(make_cyclic(3))); }
inline WreathHandle z2_wr_z3_regular() { return make_wreath(make_cyclic(2), make_regular(make_cyclic(3))); }

struct CorpusEntry {
  std::string name;
  WreathHandle g;
  Tri answer;
  Tri cond_i;
  Tri cond_ii;
  Tri cond_iii;
};

// The six regression instances with their expected verdicts.
inline std::vector<CorpusEntry> regression_corpus() {
  return {
      {"Z2 wr Z (lamplighter)", lamplighter(), Tri::Yes, Tri::Yes, Tri::No, Tri::Yes},
      {"F2 wr Z2 (swap)", f2_swap(), Tri::Yes, Tri::Yes, Tri::Yes, Tri::No},
      {"Z2, Q=Z, trivial Omega", z2_trivial_omega(), Tri::No, Tri::No, Tri::No, Tri::No},
      {"Z2, Q=Z, regular + int-mod 3", z2_mixed(), Tri::No, Tri::Yes, Tri::No, Tri::No},
      {"F2, Q=Z, regular + int-mod 3", f2_mixed(), Tri::Yes, Tri::Yes, Tri::Yes, Tri::No},
      {"S3 wr S3 (natural)", s3_wr_s3(), Tri::No, Tri::Yes, Tri::No, Tri::No},
  };
}

}  // namespace wricc::corpus
