#pragma once

#include <string_view>

namespace wricc {

// Kleene three-valued logic.
enum class Tri { No, Yes, Unknown };

constexpr Tri from_bool(bool b) { return b ? Tri::Yes : Tri::No; }

constexpr Tri operator!(Tri a) {
  switch (a) {
    case Tri::No: return Tri::Yes;
    case Tri::Yes: return Tri::No;
    default: return Tri::Unknown;
  }
}

constexpr Tri operator&&(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Unknown;
}

constexpr Tri operator||(Tri a, Tri b) {
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::No && b == Tri::No) return Tri::No;
  return Tri::Unknown;
}

constexpr std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::No: return "No";
    case Tri::Yes: return "Yes";
    default: return "Unknown";
  }
}

}  // namespace wricc
