#ifndef CARTIERLAB_ERROR_HPP
#define CARTIERLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cartierlab {

/// Failure kinds raised by the library. Input/usage problems (parse errors,
/// bad flags) are kept distinct from domain errors so the CLI can map them
/// to exit code 2.
enum class ErrorKind {
  SpecMismatch,
  NonzeroConstantTerm,
  ArityMismatch,
  NonUnitConstantTerm,
  NotAUnit,
  NotReversible,
  NonInvertibleIndex,
  NotTorsionFree,
  TruncationTooShort,
  IntegralityFailure,
  VBoundTooSmall,
  OddIndex,
  DenominatorNotInvertible,
  NonInvertibleJacobian,
  AlgebraMismatch,
  CeilingExceeded,
  ParseError,
  UsageError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cartierlab

#endif
