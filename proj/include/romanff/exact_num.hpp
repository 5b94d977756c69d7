#pragma once

/**
 * @file exact_num.hpp
 * @brief Arbitrary-precision integers and canonical rationals.
 *
 * ExactInt wraps a GMP integer. ExactRational is kept in lowest terms at all
 * times: the denominator is positive, gcd(|num|, den) = 1 and zero is 0/1.
 * Because the form is canonical, equality is component-wise.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace romanff {

class ExactInt {
 public:
  ExactInt() = default;

  template <std::signed_integral T>
  ExactInt(T v) : value_(static_cast<long>(v)) {}

  template <std::unsigned_integral T>
  ExactInt(T v) : value_(static_cast<unsigned long>(v)) {}

  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  /// Accepts an optional sign followed by decimal digits.
  static ExactInt parse(std::string_view text);

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }

  ExactInt abs() const { return ExactInt(mpz_class(::abs(value_))); }

  std::optional<long> to_long() const;
  std::string to_string() const { return value_.get_str(); }

  const mpz_class& mpz() const noexcept { return value_; }

  ExactInt operator-() const { return ExactInt(mpz_class(-value_)); }

  ExactInt& operator+=(const ExactInt& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactInt& operator-=(const ExactInt& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactInt& operator*=(const ExactInt& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

 private:
  mpz_class value_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);

/// n! computed by iterated multiplication; 0! = 1. Throws NegativeInput for n < 0.
ExactInt int_factorial(const ExactInt& n);

class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(ExactInt integer) : num_(std::move(integer)), den_(1) {}

  template <std::integral T>
  ExactRational(T v) : num_(v), den_(1) {}

  /// Reduces num/den to canonical form. Throws ZeroDenominator when den = 0.
  static ExactRational normalize(ExactInt num, ExactInt den);

  /// Parses "p", "p/q", or a finite decimal such as "-3.4" (exactly -17/5).
  static ExactRational parse(std::string_view text);

  const ExactInt& numerator() const noexcept { return num_; }
  const ExactInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == ExactInt(1); }

  /// Rounds toward -infinity.
  ExactInt floor() const;
  /// Rounds toward +infinity.
  ExactInt ceil() const;

  ExactRational abs() const;
  ExactRational reciprocal() const;

  /// "p/q", or "p" for integers.
  std::string to_string() const;

  ExactRational operator-() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  /// Throws DivisionByZero when b = 0.
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  ExactRational& operator+=(const ExactRational& rhs) { return *this = *this + rhs; }
  ExactRational& operator-=(const ExactRational& rhs) { return *this = *this - rhs; }
  ExactRational& operator*=(const ExactRational& rhs) { return *this = *this * rhs; }
  ExactRational& operator/=(const ExactRational& rhs) { return *this = *this / rhs; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

 private:
  struct Canonical {};
  ExactRational(ExactInt num, ExactInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  ExactInt num_;
  ExactInt den_;
};

/// base^exponent exactly. base^0 = 1 for base != 0; 0^0 is treated as 1 as well,
/// 0^e for e < 0 throws ZeroToNegativePower.
ExactRational pow(const ExactRational& base, const ExactInt& exponent);

/// True iff the value obeys every ExactRational invariant.
bool satisfies_invariants(const ExactRational& value);

}  // namespace romanff
