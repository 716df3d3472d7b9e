#include "circuitcat/error.hpp"

namespace circuitcat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnbalancedA: return "UnbalancedA";
    case ErrorCode::UnbalancedNu: return "UnbalancedNu";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NeedTwoPositives: return "NeedTwoPositives";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::VolumeBound: return "VolumeBound";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::WrongHom: return "WrongHom";
    case ErrorCode::ExteriorOverflow: return "ExteriorOverflow";
    case ErrorCode::NeedBaseCase: return "NeedBaseCase";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace circuitcat
