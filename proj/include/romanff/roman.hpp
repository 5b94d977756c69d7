#pragma once

/**
 * @file roman.hpp
 * @brief Roman factorial: closed, recursive, and unified formulations.
 *
 * The Roman factorial extends n! to negative integers:
 *   n >= 0: n!
 *   n <  0: (-1)^(-n-1) / (-n-1)!
 * and is never zero. Every formulation here returns the same canonical
 * rational; the recursive ones walk from a base case iteratively so that
 * |n| in the tens of thousands does not hit call-depth limits.
 */

#include <array>
#include <optional>
#include <string_view>

#include "romanff/exact_num.hpp"

namespace romanff {

enum class DefinitionKind {
  Piecewise,
  DoublyRecursive,
  UnifiedRecursive,
  FirstGen,
  Rising,
  Falling,
  RisingAlt,
  FallingAlt,
};

inline constexpr std::array<DefinitionKind, 8> kAllDefinitions = {
    DefinitionKind::Piecewise, DefinitionKind::DoublyRecursive, DefinitionKind::UnifiedRecursive,
    DefinitionKind::FirstGen,  DefinitionKind::Rising,          DefinitionKind::Falling,
    DefinitionKind::RisingAlt, DefinitionKind::FallingAlt,
};

/// "piecewise", "doubly-recursive", "unified-recursive", "first-gen",
/// "rising", "falling", "rising-alt", "falling-alt".
std::string_view name(DefinitionKind kind) noexcept;
std::optional<DefinitionKind> parse_definition(std::string_view text) noexcept;
/// Throws UnknownDefinition.
DefinitionKind definition_from_name(std::string_view text);

struct RomanValue {
  ExactInt n;
  ExactRational value;
  DefinitionKind definition;
};

/// Closed form.
ExactRational roman_piecewise(const ExactInt& n);

/// n * [n-1]! for n >= 1, [n+1]!/(n+1) for n <= -2, base cases [0]! = [-1]! = 1.
ExactRational roman_doubly_recursive(const ExactInt& n);

/// (n + xi'(n))^theta(n) * [n - theta(n)]!, base cases [0]! = [-1]! = 1.
ExactRational roman_first_gen(const ExactInt& n);

/// eta(n) * ((|n| - xi'(n))!)^theta(n).
ExactRational roman_unified_recursive(const ExactInt& n);

/// Dispatches to the evaluator named by `kind` (product kinds included).
ExactRational roman_factorial(const ExactInt& n, DefinitionKind kind);
RomanValue roman_value(const ExactInt& n, DefinitionKind kind);

/// [n]! * (n + 1) == [n+1]! under `kind`. Fails only at n = -1.
bool roman_recurrence_holds(const ExactInt& n, DefinitionKind kind = DefinitionKind::Piecewise);

}  // namespace romanff
