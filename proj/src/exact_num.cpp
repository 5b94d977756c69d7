#include "romanff/exact_num.hpp"

#include <algorithm>
#include <cctype>

#include "romanff/error.hpp"

namespace romanff {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

ExactInt ExactInt::parse(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(digits), 10);
  if (negative) v = -v;
  return ExactInt(std::move(v));
}

std::optional<long> ExactInt::to_long() const {
  if (!value_.fits_slong_p()) return std::nullopt;
  return value_.get_si();
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return ExactInt(std::move(g));
}

ExactInt int_factorial(const ExactInt& n) {
  if (n.sign() < 0) {
    throw Error(Errc::NegativeInput, "factorial of negative integer " + n.to_string());
  }
  mpz_class acc = 1;
  for (mpz_class k = 2; k <= n.mpz(); ++k) acc *= k;
  return ExactInt(std::move(acc));
}

ExactRational ExactRational::normalize(ExactInt num, ExactInt den) {
  if (den.is_zero()) {
    throw Error(Errc::ZeroDenominator, num.to_string() + "/0");
  }
  if (num.is_zero()) return ExactRational();
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  ExactInt g = gcd(num, den);
  if (g != ExactInt(1)) {
    mpz_class n = num.mpz(), d = den.mpz();
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.mpz().get_mpz_t());
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.mpz().get_mpz_t());
    return ExactRational(ExactInt(std::move(n)), ExactInt(std::move(d)), Canonical{});
  }
  return ExactRational(std::move(num), std::move(den), Canonical{});
}

ExactRational ExactRational::parse(std::string_view text) {
  auto fail = [&] { throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) fail();
    return normalize(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) fail();
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) fail();

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return normalize(ExactInt(std::move(num)), ExactInt(std::move(den)));
  }

  return ExactRational(ExactInt::parse(text));
}

ExactInt ExactRational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_.mpz().get_mpz_t(), den_.mpz().get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt ExactRational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num_.mpz().get_mpz_t(), den_.mpz().get_mpz_t());
  return ExactInt(std::move(q));
}

ExactRational ExactRational::abs() const { return ExactRational(num_.abs(), den_, Canonical{}); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "reciprocal of 0");
  if (num_.sign() < 0) return ExactRational(-den_, -num_, Canonical{});
  return ExactRational(den_, num_, Canonical{});
}

std::string ExactRational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

ExactRational ExactRational::operator-() const { return ExactRational(-num_, den_, Canonical{}); }

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  if (a.is_integer() && b.is_integer()) return ExactRational(a.num_ + b.num_);
  return ExactRational::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return a + (-b); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  if (a.is_integer() && b.is_integer()) return ExactRational(a.num_ * b.num_);
  return ExactRational::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, a.to_string() + " / 0");
  return ExactRational::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

ExactRational pow(const ExactRational& base, const ExactInt& exponent) {
  if (exponent.is_zero()) return ExactRational(1);
  if (base.is_zero()) {
    if (exponent.sign() < 0) {
      throw Error(Errc::ZeroToNegativePower, "0^" + exponent.to_string());
    }
    return ExactRational();
  }
  // |base| = 1 needs only the parity of the exponent, whatever its size.
  if (base.is_integer() && base.numerator().abs() == ExactInt(1)) {
    if (base.sign() > 0 || exponent.is_even()) return ExactRational(1);
    return ExactRational(-1);
  }

  ExactInt magnitude = exponent.abs();
  if (!magnitude.mpz().fits_ulong_p()) {
    throw Error(Errc::Overflow, "exponent too large: " + exponent.to_string());
  }
  unsigned long e = magnitude.mpz().get_ui();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().mpz().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().mpz().get_mpz_t(), e);
  // Powers of coprime integers stay coprime; normalize only fixes the sign.
  ExactRational result = ExactRational::normalize(ExactInt(std::move(num)), ExactInt(std::move(den)));
  return exponent.sign() < 0 ? result.reciprocal() : result;
}

bool satisfies_invariants(const ExactRational& value) {
  const ExactInt& num = value.numerator();
  const ExactInt& den = value.denominator();
  if (den.sign() <= 0) return false;
  if (num.is_zero()) return den == ExactInt(1);
  return gcd(num, den) == ExactInt(1);
}

}  // namespace romanff
