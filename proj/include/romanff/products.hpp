#pragma once

// Pi-products and the product-form Roman factorials.

#include <functional>

#include "romanff/exact_num.hpp"

namespace romanff {

using ProductFactor = std::function<ExactRational(const ExactInt& k)>;

struct ProductSpec {
  ExactInt lower;
  ExactInt upper;
  ProductFactor factor;
};

inline constexpr long kDefaultLimitCap = 1'000'000;

/// Product of factor(k) for k = lower..upper. An empty range (upper < lower)
/// is 1 without consulting the factor. A nonempty range whose limits exceed
/// `limit_cap` in magnitude throws LimitExceeded; any exception thrown by the
/// factor is reported as FactorUndefined.
ExactRational pi_product(const ProductSpec& spec, const ExactInt& limit_cap = kDefaultLimitCap);

/// n! as the rising product of k over 1..n. Throws NegativeInput.
ExactRational rising_pos(const ExactInt& n);
/// n! as the falling product of (n - k) over 0..n-1. Throws NegativeInput.
ExactRational falling_pos(const ExactInt& n);

/// n * prod_{k=1}^{-n} 1/(-k). Throws NonNegativeInput for n >= 0.
ExactRational rising_neg(const ExactInt& n);
/// n * prod_{k=0}^{-n-1} 1/(n+k). Throws NonNegativeInput for n >= 0.
ExactRational falling_neg(const ExactInt& n);

// Unified over all integers with Phi(n) as prefactor:
//   rising:  Phi(n) * prod_{k=1}^{|n|}   (k*theta(n))^theta(n)
//   falling: Phi(n) * prod_{k=0}^{|n|-1} (n - k*theta(n))^theta(n)
ExactRational roman_rising_gen(const ExactInt& n);
ExactRational roman_falling_gen(const ExactInt& n);

// The variant that shifts the upper limit by xi'(n) instead of using Phi:
//   rising:  prod_{k=1}^{|n|-xi'(n)}   (k*theta(n))^theta(n)
//   falling: prod_{k=0}^{|n|-1-xi'(n)} (n - k*theta(n))^theta(n)
// Both are evaluated as written. The falling one does not reproduce the
// Roman factorial for n <= -2 (at n = -2 it gives -1/2 instead of -1).
ExactRational roman_rising_alt(const ExactInt& n);
ExactRational roman_falling_alt(const ExactInt& n);

}  // namespace romanff
