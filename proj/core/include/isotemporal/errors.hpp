#pragma once

#include <stdexcept>
#include <string>

namespace isotemporal {

// Input-validation failure categories. The CLI maps these to exit code 2 and
// prints the category name on stderr.
enum class ErrorCode {
  DuplicateTime,
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  DuplicateVertex,
  NoPlus,
  AlternationViolated,
  TooShort,
  OddInput,
  SizeMismatch,
  TooLarge,
  CapExceeded,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateTime: return "DuplicateTime";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NoPlus: return "NoPlus";
    case ErrorCode::AlternationViolated: return "AlternationViolated";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw ValidationError(code, message);
}

}  // namespace isotemporal
