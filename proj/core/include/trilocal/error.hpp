#ifndef TRILOCAL_ERROR_HPP
#define TRILOCAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trilocal {

/// Failure categories raised by the library. Absence of a solution is never
/// an error (solvers return empty optionals); these signal misuse, size
/// guards, or broken structural premises.
enum class ErrorCode {
  CompositeP,
  DegreeTooLarge,
  MixedFields,
  DivisionByZero,
  InvalidSpec,
  MixedRings,
  NotAUnit,
  RingTooLarge,
  NotLocal,
  NotAField,
  NoSolution,
  ShapeMismatch,
  NotInvertible,
  TooLarge,
  BudgetExceeded,
  NoFiller,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trilocal

#endif  // TRILOCAL_ERROR_HPP
