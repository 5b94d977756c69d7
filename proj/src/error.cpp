#include "romanff/error.hpp"

namespace romanff {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroToNegativePower: return "ZeroToNegativePower";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::NonNegativeInput: return "NonNegativeInput";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::UnknownFunction: return "UnknownFunction";
    case Errc::UnknownDefinition: return "UnknownDefinition";
    case Errc::ClassificationFailed: return "ClassificationFailed";
    case Errc::FactorUndefined: return "FactorUndefined";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace romanff
