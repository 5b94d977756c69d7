#include "romanff/roman.hpp"

#include <string>

#include "romanff/core_ff.hpp"
#include "romanff/error.hpp"
#include "romanff/products.hpp"

namespace romanff {

namespace {

const ExactInt kZero(0);
const ExactInt kMinusOne(-1);

bool is_base_case(const ExactInt& n) { return n == kZero || n == kMinusOne; }

}  // namespace

std::string_view name(DefinitionKind kind) noexcept {
  switch (kind) {
    case DefinitionKind::Piecewise: return "piecewise";
    case DefinitionKind::DoublyRecursive: return "doubly-recursive";
    case DefinitionKind::UnifiedRecursive: return "unified-recursive";
    case DefinitionKind::FirstGen: return "first-gen";
    case DefinitionKind::Rising: return "rising";
    case DefinitionKind::Falling: return "falling";
    case DefinitionKind::RisingAlt: return "rising-alt";
    case DefinitionKind::FallingAlt: return "falling-alt";
  }
  return "";
}

std::optional<DefinitionKind> parse_definition(std::string_view text) noexcept {
  for (DefinitionKind kind : kAllDefinitions) {
    if (name(kind) == text) return kind;
  }
  return std::nullopt;
}

DefinitionKind definition_from_name(std::string_view text) {
  if (auto kind = parse_definition(text)) return *kind;
  throw Error(Errc::UnknownDefinition, "unknown definition '" + std::string(text) + "'");
}

ExactRational roman_piecewise(const ExactInt& n) {
  if (n.sign() >= 0) return ExactRational(int_factorial(n));
  const ExactInt m = -n - 1;
  return pow(ExactRational(-1), m) / ExactRational(int_factorial(m));
}

ExactRational roman_doubly_recursive(const ExactInt& n) {
  ExactRational value(1);
  if (is_base_case(n)) return value;
  if (n.sign() > 0) {
    // [k]! = k * [k-1]!, climbing from [0]!.
    for (ExactInt k = 1; k <= n; k += 1) value *= ExactRational(k);
  } else {
    // [k]! = [k+1]! / (k+1), descending from [-1]!.
    for (ExactInt k = -2; k >= n; k -= 1) value /= ExactRational(k + 1);
  }
  return value;
}

ExactRational roman_first_gen(const ExactInt& n) {
  if (is_base_case(n)) return ExactRational(1);
  // Unrolled: multiply in (k + xi'(k))^theta(k) while stepping k -> k - theta(k).
  ExactRational value(1);
  ExactInt k = n;
  while (!is_base_case(k)) {
    const ExactRational kr(k);
    const ExactInt t = theta(kr).numerator();
    value *= pow(kr + xi_prime(kr), t);
    k -= t;
  }
  return value;
}

ExactRational roman_unified_recursive(const ExactInt& n) {
  const ExactRational nr(n);
  const ExactInt arg = n.abs() - xi_prime(nr).numerator();
  return eta(nr) * pow(ExactRational(int_factorial(arg)), theta(nr).numerator());
}

ExactRational roman_factorial(const ExactInt& n, DefinitionKind kind) {
  switch (kind) {
    case DefinitionKind::Piecewise: return roman_piecewise(n);
    case DefinitionKind::DoublyRecursive: return roman_doubly_recursive(n);
    case DefinitionKind::UnifiedRecursive: return roman_unified_recursive(n);
    case DefinitionKind::FirstGen: return roman_first_gen(n);
    case DefinitionKind::Rising: return roman_rising_gen(n);
    case DefinitionKind::Falling: return roman_falling_gen(n);
    case DefinitionKind::RisingAlt: return roman_rising_alt(n);
    case DefinitionKind::FallingAlt: return roman_falling_alt(n);
  }
  throw Error(Errc::UnknownDefinition, "unhandled definition kind");
}

RomanValue roman_value(const ExactInt& n, DefinitionKind kind) { return {n, roman_factorial(n, kind), kind}; }

bool roman_recurrence_holds(const ExactInt& n, DefinitionKind kind) {
  return roman_factorial(n, kind) * ExactRational(n + 1) == roman_factorial(n + 1, kind);
}

}  // namespace romanff
