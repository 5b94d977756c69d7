#include "romanff/products.hpp"

#include <exception>
#include <string>

#include "romanff/core_ff.hpp"
#include "romanff/error.hpp"

namespace romanff {

namespace {

ExactRational rational(const ExactInt& v) { return ExactRational(v); }

// theta(n) as an integer exponent.
ExactInt sign_exponent(const ExactInt& n) { return theta(rational(n)).numerator(); }

// (k*t)^t
ProductFactor rising_term(const ExactInt& n) {
  return [t = sign_exponent(n)](const ExactInt& k) { return pow(rational(k * t), t); };
}

// (n - k*t)^t
ProductFactor falling_term(const ExactInt& n) {
  return [n, t = sign_exponent(n)](const ExactInt& k) { return pow(rational(n - k * t), t); };
}

}  // namespace

ExactRational pi_product(const ProductSpec& spec, const ExactInt& limit_cap) {
  if (spec.upper < spec.lower) return ExactRational(1);
  if (spec.lower.abs() > limit_cap || spec.upper.abs() > limit_cap) {
    throw Error(Errc::LimitExceeded, "product limits [" + spec.lower.to_string() + ", " + spec.upper.to_string() +
                                         "] exceed cap " + limit_cap.to_string());
  }
  ExactRational acc(1);
  for (ExactInt k = spec.lower; k <= spec.upper; k += 1) {
    try {
      acc *= spec.factor(k);
    } catch (const std::exception& e) {
      throw Error(Errc::FactorUndefined, "factor at k = " + k.to_string() + ": " + e.what());
    }
  }
  return acc;
}

ExactRational rising_pos(const ExactInt& n) {
  if (n.sign() < 0) throw Error(Errc::NegativeInput, "rising_pos(" + n.to_string() + ")");
  return pi_product({1, n, [](const ExactInt& k) { return rational(k); }});
}

ExactRational falling_pos(const ExactInt& n) {
  if (n.sign() < 0) throw Error(Errc::NegativeInput, "falling_pos(" + n.to_string() + ")");
  return pi_product({0, n - 1, [&n](const ExactInt& k) { return rational(n - k); }});
}

ExactRational rising_neg(const ExactInt& n) {
  if (n.sign() >= 0) throw Error(Errc::NonNegativeInput, "rising_neg(" + n.to_string() + ")");
  return rational(n) * pi_product({1, -n, [](const ExactInt& k) { return rational(-k).reciprocal(); }});
}

ExactRational falling_neg(const ExactInt& n) {
  if (n.sign() >= 0) throw Error(Errc::NonNegativeInput, "falling_neg(" + n.to_string() + ")");
  return rational(n) * pi_product({0, -n - 1, [&n](const ExactInt& k) { return rational(n + k).reciprocal(); }});
}

ExactRational roman_rising_gen(const ExactInt& n) {
  return phi(rational(n)) * pi_product({1, n.abs(), rising_term(n)});
}

ExactRational roman_falling_gen(const ExactInt& n) {
  return phi(rational(n)) *
         pi_product({0, n.abs() - 1, falling_term(n)});
}

ExactRational roman_rising_alt(const ExactInt& n) {
  const ExactInt upper = n.abs() - xi_prime(rational(n)).numerator();
  return pi_product({1, upper, rising_term(n)});
}

ExactRational roman_falling_alt(const ExactInt& n) {
  const ExactInt upper = n.abs() - 1 - xi_prime(rational(n)).numerator();
  return pi_product({0, upper, falling_term(n)});
}

}  // namespace romanff
