#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace romanff {

enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  ZeroToNegativePower,
  NegativeInput,
  NonNegativeInput,
  InvalidEpsilon,
  UnknownFunction,
  UnknownDefinition,
  ClassificationFailed,
  FactorUndefined,
  LimitExceeded,
  NonFiniteInput,
  InvalidConfig,
  InvalidRange,
  ParseError,
  Overflow,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace romanff
