#pragma once

#include <stdexcept>
#include <string>

namespace goldman {

enum class ErrorCode {
  SyntaxError,
  NotHyperbolic,
  NotMember,
  ConjugateInputs,
  NotPrimitive,
  NoStabilization,
  OddCosetCount,
  AxesDoNotCross,
  UnsupportedClassKind,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::ConjugateInputs: return "ConjugateInputs";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::OddCosetCount: return "OddCosetCount";
    case ErrorCode::AxesDoNotCross: return "AxesDoNotCross";
    case ErrorCode::UnsupportedClassKind: return "UnsupportedClassKind";
  }
  return "UnknownError";
}

/// Domain-level failure carrying a machine-readable code.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace goldman
