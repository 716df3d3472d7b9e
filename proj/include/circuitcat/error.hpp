#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circuitcat {

/// Stable error codes. The textual form (see `to_string`) is part of the CLI
/// contract and must not change.
enum class ErrorCode {
  UnbalancedA,
  UnbalancedNu,
  ZeroEntry,
  TooShort,
  Overflow,
  LengthMismatch,
  NeedTwoPositives,
  OutOfRange,
  BadOrder,
  OutOfBounds,
  VolumeBound,
  BranchMismatch,
  WrongHom,
  ExteriorOverflow,
  NeedBaseCase,
  BadPosition,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circuitcat
