#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sunit {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  BothInputsZero,
  InvalidModulus,
  ZeroInput,
  ConstantInput,
  ValuationOfZero,
  NotInvertible,
  ZeroComponent,
  SingularWitness,
  IndexOutOfRange,
  WrongArity,
  NotAMember,
  NotAUnitAtPlace,
  SyntaxError,
  Overflow,
  ResourceLimit,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sunit
