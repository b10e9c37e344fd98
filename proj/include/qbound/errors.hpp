#pragma once

#include <stdexcept>
#include <string>

namespace qbound {

enum class ErrorCode {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  DimensionMismatch,
  BadDimension,
  BadRank,
  OutOfDomain,
  NoConvergence,
  NoBracket,
  WindowInfeasible,
  InconsistentRecord,
  RankTooHigh,
  IoError,
  UsageError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotHermitian:       return "NotHermitian";
    case ErrorCode::NotUnitTrace:       return "NotUnitTrace";
    case ErrorCode::NotPSD:             return "NotPSD";
    case ErrorCode::DimensionMismatch:  return "DimensionMismatch";
    case ErrorCode::BadDimension:       return "BadDimension";
    case ErrorCode::BadRank:            return "BadRank";
    case ErrorCode::OutOfDomain:        return "OutOfDomain";
    case ErrorCode::NoConvergence:      return "NoConvergence";
    case ErrorCode::NoBracket:          return "NoBracket";
    case ErrorCode::WindowInfeasible:   return "WindowInfeasible";
    case ErrorCode::InconsistentRecord: return "InconsistentRecord";
    case ErrorCode::RankTooHigh:        return "RankTooHigh";
    case ErrorCode::IoError:            return "IoError";
    case ErrorCode::UsageError:         return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Validation errors are caller mistakes (bad input data); numerical errors
  // mean an algorithm failed to deliver. The CLI maps them to exit codes 3/4.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::NoConvergence || code_ == ErrorCode::NoBracket ||
           code_ == ErrorCode::WindowInfeasible;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qbound
