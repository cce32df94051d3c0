#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvw {

enum class ErrorKind {
  OrderNotAntisymmetric,
  ClosureViolation,
  AxiomViolation,
  IndexOutOfRange,
  InvalidArgument,
  SizeBound,
  InvalidUnit,
  NotCommutative,
  NotACongruence,
  NotAHomomorphism,
  Trivial,
  GateNotMet,
  EmptySeed,
  NotACover,
  SyntaxError,
  Validation,
  SchemaError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind and, where one exists,
// a human-readable witness (offending tuple, JSON path, source span).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message, std::string witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace mvw
