#include "sunit/error.hpp"

namespace sunit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::BothInputsZero: return "both-inputs-zero";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::ZeroInput: return "zero-input";
    case ErrorKind::ConstantInput: return "constant-input";
    case ErrorKind::ValuationOfZero: return "valuation-of-zero";
    case ErrorKind::NotInvertible: return "denominator-not-invertible";
    case ErrorKind::ZeroComponent: return "zero-component";
    case ErrorKind::SingularWitness: return "singular-witness";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::WrongArity: return "wrong-arity";
    case ErrorKind::NotAMember: return "not-a-member";
    case ErrorKind::NotAUnitAtPlace: return "not-a-unit-at-place";
    case ErrorKind::SyntaxError: return "syntax-error";
    case ErrorKind::Overflow: return "integer-overflow";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace sunit
