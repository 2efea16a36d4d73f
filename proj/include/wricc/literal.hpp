#pragma once

// Small text helpers for the element and point literal grammars. Splitting is
// bracket-aware so literals nest: `{0:(1; [1,0])}@2`.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace wricc::literal {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool is_open(char c) { return c == '(' || c == '[' || c == '{'; }
inline bool is_close(char c) { return c == ')' || c == ']' || c == '}'; }

// Split at `sep` occurring at nesting depth 0.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (is_open(c)) ++depth;
    else if (is_close(c)) --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

// Position of the last `c` at depth 0, if any.
inline std::optional<std::size_t> rfind_top(std::string_view s, char c) {
  int depth = 0;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_open(s[i])) ++depth;
    else if (is_close(s[i])) --depth;
    else if (s[i] == c && depth == 0) found = i;
  }
  return found;
}

inline std::optional<std::size_t> find_top(std::string_view s, char c) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_open(s[i])) ++depth;
    else if (is_close(s[i])) --depth;
    else if (s[i] == c && depth == 0) return i;
  }
  return std::nullopt;
}

// Strips a matching outer bracket pair, e.g. "[1,0]" with '[' ']'.
inline std::optional<std::string_view> unwrap(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) return std::nullopt;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_open(s[i])) ++depth;
    else if (is_close(s[i])) --depth;
    if (depth == 0 && i + 1 < s.size()) return std::nullopt;
  }
  return trim(s.substr(1, s.size() - 2));
}

inline std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(ErrorCode::MalformedLiteral, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace wricc::literal
