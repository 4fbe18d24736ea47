#include "drgame/error.hpp"

namespace drgame {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::PreferredOutsideAdmitted: return "PreferredOutsideAdmitted";
    case ErrorCode::PreferredTooShort: return "PreferredTooShort";
    case ErrorCode::NonPositivePower: return "NonPositivePower";
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::InfeasibleStart: return "InfeasibleStart";
    case ErrorCode::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::MissingTask: return "MissingTask";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeShift: return "NegativeShift";
    case ErrorCode::InvalidCoefficients: return "InvalidCoefficients";
    case ErrorCode::UnevaluatedChromosome: return "UnevaluatedChromosome";
    case ErrorCode::InfeasiblePlayer: return "InfeasiblePlayer";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyFront: return "EmptyFront";
    case ErrorCode::EmptyCatalog: return "EmptyCatalog";
    case ErrorCode::PreferredWindowInfeasible: return "PreferredWindowInfeasible";
    case ErrorCode::MissingReference: return "MissingReference";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace drgame
