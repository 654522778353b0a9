#include "sumprod/error.hpp"

namespace sumprod {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::ModulusOutOfRange: return "ModulusOutOfRange";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::EmptyDenominator: return "EmptyDenominator";
    case Errc::DegenerateY: return "DegenerateY";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::RestrictionViolated: return "RestrictionViolated";
    case Errc::QIsFull: return "QIsFull";
    case Errc::QIsEmpty: return "QIsEmpty";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::EpsOutOfRange: return "EpsOutOfRange";
    case Errc::ComputeBudgetExceeded: return "ComputeBudgetExceeded";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::MissingBinding: return "MissingBinding";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::EmptySet: return "EmptySet";
  }
  return "Unknown";
}

}  // namespace sumprod
