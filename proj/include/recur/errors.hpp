#pragma once

#include <stdexcept>
#include <string>

namespace recur {

enum class ErrorCode {
  DivisionByZeroPoly,
  BothZero,
  UnsupportedMerge,
  UnsupportedForm,
  CofactorTooLarge,
  UnsupportedDegeneracy,
  NoRuleForCase,
  GuardViolated,
  SolvedCoefficientZero,
  NoLinearFactor,
  MaxStepsExceeded,
  SyntaxError,
  SymbolicExponent,
  CatalogDefect,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZeroPoly: return "division-by-zero-poly";
    case ErrorCode::BothZero: return "both-zero";
    case ErrorCode::UnsupportedMerge: return "unsupported-merge";
    case ErrorCode::UnsupportedForm: return "unsupported-form";
    case ErrorCode::CofactorTooLarge: return "cofactor-too-large";
    case ErrorCode::UnsupportedDegeneracy: return "unsupported-degeneracy";
    case ErrorCode::NoRuleForCase: return "no-rule-for-case";
    case ErrorCode::GuardViolated: return "guard-violated";
    case ErrorCode::SolvedCoefficientZero: return "solved-coefficient-zero";
    case ErrorCode::NoLinearFactor: return "no-linear-factor";
    case ErrorCode::MaxStepsExceeded: return "max-steps-exceeded";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::SymbolicExponent: return "symbolic-exponent";
    case ErrorCode::CatalogDefect: return "catalog-defect";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

  /// Machine-readable stderr line: error:<code>:<detail>
  std::string machine_line() const {
    return "error:" + std::string(error_code_name(code_)) + ":" + detail_;
  }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace recur
