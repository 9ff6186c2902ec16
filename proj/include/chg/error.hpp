#pragma once

#include <stdexcept>
#include <string>

namespace chg {

enum class Errc {
  // graph construction
  DuplicateId,
  UnknownNode,
  NegativeWeight,
  UnboundParameter,
  SelfTargetWithoutAdvance,
  DomainViolation,
  IncompatibleSharedNode,
  ConflictingInitials,
  // expressions
  LexError,
  ParseError,
  TypeMismatch,
  DivisionByZero,
  UnknownBuiltin,
  ArityMismatch,
  DuplicateBuiltin,
  EvalError,
  // solving
  NoPath,
  IterationLimit,
  FiringLimit,
  AllRunsFailed,
  // model io
  SchemaError,
  IncludeCycle,
  ValidationError,
  RaggedRow,
  EmptyFile,
  TypeInferenceConflict,
  IoError,
  // domain library
  SpecInvariantViolation,
  ContractViolation,
};

const char* errc_name(Errc code);

/// Single exception type for the whole engine; the code discriminates.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

} // namespace chg
