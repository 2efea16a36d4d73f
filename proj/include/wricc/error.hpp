#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wricc {

// Stable error codes; the CLI prints the name next to the message.
enum class ErrorCode {
  KindMismatch,
  InvalidElement,
  Unsupported,
  ZeroBudget,
  Precondition,
  TrivialD,
  EmptyOmega,
  NotFreeAction,
  UnknownVerdict,
  CertificateBudget,
  UnknownKind,
  UnsupportedQKind,
  MalformedLiteral,
  InvalidInstance,
  InvalidAction,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ZeroBudget: return "ZeroBudget";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::TrivialD: return "TrivialD";
    case ErrorCode::EmptyOmega: return "EmptyOmega";
    case ErrorCode::NotFreeAction: return "NotFreeAction";
    case ErrorCode::UnknownVerdict: return "UnknownVerdict";
    case ErrorCode::CertificateBudget: return "CertificateBudget";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::UnsupportedQKind: return "UnsupportedQKind";
    case ErrorCode::MalformedLiteral: return "MalformedLiteral";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidAction: return "InvalidAction";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace wricc
