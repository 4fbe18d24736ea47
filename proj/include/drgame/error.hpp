#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drgame {

enum class ErrorCode {
  WindowTooShort,
  PreferredOutsideAdmitted,
  PreferredTooShort,
  NonPositivePower,
  SlotOutOfRange,
  InfeasibleStart,
  InfeasibleSchedule,
  MissingTask,
  LengthMismatch,
  NegativeShift,
  InvalidCoefficients,
  UnevaluatedChromosome,
  InfeasiblePlayer,
  InvalidConfig,
  EmptyFront,
  EmptyCatalog,
  PreferredWindowInfeasible,
  MissingReference,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drgame
