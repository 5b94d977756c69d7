#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "romanff/error.hpp"
#include "romanff/exact_num.hpp"

using romanff::Errc;
using romanff::Error;
using romanff::ExactInt;
using romanff::ExactRational;

namespace {

// gcd by repeated subtraction, only for small non-negative values.
std::int64_t subtraction_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  while (a != b) {
    if (a > b) {
      a -= b;
    } else {
      b -= a;
    }
  }
  return a;
}

// Minimal int64 fraction reduced with the subtraction gcd.
struct SmallFrac {
  std::int64_t num;
  std::int64_t den;
};

SmallFrac reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return {0, 1};
  const std::int64_t g = subtraction_gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

ExactRational rat(long p, long q) { return ExactRational::normalize(p, q); }

template <typename F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << romanff::to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<ExactRational> random_grid(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 40);
  std::vector<ExactRational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rat(num(rng), den(rng)));
  return out;
}

}  // namespace

TEST(ExactInt, ParseAndPrint) {
  EXPECT_EQ(ExactInt::parse("-42"), ExactInt(-42));
  EXPECT_EQ(ExactInt::parse("+7"), ExactInt(7));
  EXPECT_EQ(ExactInt::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  expect_error(Errc::ParseError, [] { ExactInt::parse(""); });
  expect_error(Errc::ParseError, [] { ExactInt::parse("12a"); });
  expect_error(Errc::ParseError, [] { ExactInt::parse("-"); });
}

TEST(ExactInt, ZeroIsUnique) {
  EXPECT_EQ(ExactInt(0), -ExactInt(0));
  EXPECT_EQ(ExactInt(0).sign(), 0);
  EXPECT_EQ((ExactInt(5) - ExactInt(5)).to_string(), "0");
}

TEST(ExactInt, GcdMatchesSubtractionOracle) {
  for (std::int64_t a = 0; a <= 60; ++a) {
    for (std::int64_t b = 0; b <= 60; ++b) {
      EXPECT_EQ(romanff::gcd(a, b), ExactInt(subtraction_gcd(a, b))) << a << ", " << b;
      EXPECT_EQ(romanff::gcd(-a, b), ExactInt(subtraction_gcd(a, b)));
    }
  }
}

TEST(IntFactorial, ReferenceValues) {
  EXPECT_EQ(romanff::int_factorial(0), ExactInt(1));
  EXPECT_EQ(romanff::int_factorial(7), ExactInt(5040));
  std::int64_t oracle = 1;
  for (int k = 1; k <= 10; ++k) oracle *= k;
  EXPECT_EQ(romanff::int_factorial(10), ExactInt(oracle));
  EXPECT_EQ(romanff::int_factorial(10), ExactInt(3628800));
}

TEST(IntFactorial, RecursiveStep) {
  for (long n = 1; n <= 50; ++n) {
    EXPECT_EQ(romanff::int_factorial(n), ExactInt(n) * romanff::int_factorial(n - 1)) << n;
  }
}

TEST(IntFactorial, LargeArgumentIsIterative) {
  const ExactInt f = romanff::int_factorial(2000);
  EXPECT_EQ(f.to_string().size(), 5736u);
}

TEST(IntFactorial, RejectsNegative) {
  expect_error(Errc::NegativeInput, [] { romanff::int_factorial(-1); });
}

TEST(Normalize, Examples) {
  EXPECT_EQ(rat(2, -4).to_string(), "-1/2");
  EXPECT_EQ(rat(0, 7).numerator(), ExactInt(0));
  EXPECT_EQ(rat(0, 7).denominator(), ExactInt(1));
  EXPECT_EQ(rat(720, 1).to_string(), "720");
  expect_error(Errc::ZeroDenominator, [] { rat(1, 0); });
}

TEST(Normalize, MatchesSmallFractionOracle) {
  for (long p = -30; p <= 30; ++p) {
    for (long q = -30; q <= 30; ++q) {
      if (q == 0) continue;
      const ExactRational r = rat(p, q);
      const SmallFrac f = reduce(p, q);
      EXPECT_EQ(r.numerator(), ExactInt(f.num)) << p << "/" << q;
      EXPECT_EQ(r.denominator(), ExactInt(f.den)) << p << "/" << q;
      EXPECT_TRUE(romanff::satisfies_invariants(r));
    }
  }
}

TEST(Parse, Forms) {
  EXPECT_EQ(ExactRational::parse("3"), ExactRational(3));
  EXPECT_EQ(ExactRational::parse("-6/8"), rat(-3, 4));
  EXPECT_EQ(ExactRational::parse("-3.4"), rat(-17, 5));
  EXPECT_EQ(ExactRational::parse("0.5"), rat(1, 2));
  EXPECT_EQ(ExactRational::parse(".25"), rat(1, 4));
  expect_error(Errc::ZeroDenominator, [] { ExactRational::parse("1/0"); });
  expect_error(Errc::ParseError, [] { ExactRational::parse("1/2/3"); });
  expect_error(Errc::ParseError, [] { ExactRational::parse("abc"); });
  expect_error(Errc::ParseError, [] { ExactRational::parse("1e5"); });
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(ExactRational(-1) * rat(-1, 2), rat(1, 2));
  EXPECT_EQ(rat(1, 2) + rat(-1, 2), ExactRational(0));
  EXPECT_EQ((rat(1, 2) + rat(-1, 2)).denominator(), ExactInt(1));
  EXPECT_EQ(ExactRational(1) / ExactRational(-6), rat(-1, 6));
  expect_error(Errc::DivisionByZero, [] { ExactRational(1) / ExactRational(0); });
  expect_error(Errc::DivisionByZero, [] { ExactRational(0).reciprocal(); });
}

TEST(Arithmetic, MatchesSmallFractionOracle) {
  const auto grid = random_grid(60, 7);
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const auto an = *a.numerator().to_long(), ad = *a.denominator().to_long();
      const auto bn = *b.numerator().to_long(), bd = *b.denominator().to_long();
      const SmallFrac sum = reduce(an * bd + bn * ad, ad * bd);
      const SmallFrac prod = reduce(an * bn, ad * bd);
      EXPECT_EQ(a + b, rat(sum.num, sum.den));
      EXPECT_EQ(a * b, rat(prod.num, prod.den));
      if (bn != 0) {
        const SmallFrac quot = reduce(an * bd, ad * bn);
        EXPECT_EQ(a / b, rat(quot.num, quot.den));
      }
    }
  }
}

TEST(Arithmetic, FieldProperties) {
  const auto grid = random_grid(80, 2024);
  for (const auto& a : grid) {
    EXPECT_EQ(ExactRational::normalize(a.numerator(), a.denominator()), a);
    EXPECT_EQ(a + (-a), ExactRational(0));
    for (const auto& b : grid) {
      const ExactRational sum = a + b;
      const ExactRational prod = a * b;
      EXPECT_EQ(sum, b + a);
      EXPECT_EQ(prod, b * a);
      EXPECT_TRUE(romanff::satisfies_invariants(sum));
      EXPECT_TRUE(romanff::satisfies_invariants(prod));
      EXPECT_TRUE(romanff::satisfies_invariants(a - b));
      if (!b.is_zero()) {
        EXPECT_EQ(prod / b, a);
        EXPECT_TRUE(romanff::satisfies_invariants(a / b));
      }
    }
  }
}

TEST(Arithmetic, OrderingAgreesWithCrossMultiplication) {
  const auto grid = random_grid(50, 99);
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const ExactInt lhs = a.numerator() * b.denominator();
      const ExactInt rhs = b.numerator() * a.denominator();
      EXPECT_EQ(a < b, lhs < rhs);
      EXPECT_EQ(a == b, lhs == rhs);
    }
  }
}

TEST(FloorCeil, AgreeWithDefinition) {
  EXPECT_EQ(rat(-17, 5).floor(), ExactInt(-4));
  EXPECT_EQ(rat(-17, 5).ceil(), ExactInt(-3));
  for (const auto& x : random_grid(200, 5)) {
    const ExactRational f(x.floor());
    EXPECT_LE(f, x);
    EXPECT_GT(f + ExactRational(1), x);
    EXPECT_EQ(x.ceil(), -((-x).floor()));
  }
}

TEST(Pow, Examples) {
  EXPECT_EQ(romanff::pow(6, -1), rat(1, 6));
  EXPECT_EQ(romanff::pow(rat(5, 3), 0), ExactRational(1));
  ExactRational repeated(1);
  for (int i = 0; i < 9; ++i) repeated *= ExactRational(-1);
  EXPECT_EQ(romanff::pow(-1, 9), repeated);
  EXPECT_EQ(romanff::pow(-1, 9), ExactRational(-1));
  expect_error(Errc::ZeroToNegativePower, [] { romanff::pow(0, -2); });
  EXPECT_EQ(romanff::pow(0, 3), ExactRational(0));
}

TEST(Pow, MatchesRepeatedMultiplication) {
  for (const auto& a : random_grid(30, 11)) {
    ExactRational acc(1);
    for (int e = 0; e <= 12; ++e) {
      EXPECT_EQ(romanff::pow(a, e), acc);
      if (!a.is_zero()) {
        EXPECT_EQ(romanff::pow(a, -e), acc.reciprocal());
      }
      acc *= a;
    }
  }
}

TEST(Pow, UnitBaseWithHugeExponent) {
  const ExactInt huge = ExactInt::parse("1000000000000000000000000000001");
  EXPECT_EQ(romanff::pow(-1, huge), ExactRational(-1));
  EXPECT_EQ(romanff::pow(-1, -huge + ExactInt(1)), ExactRational(1));
  EXPECT_EQ(romanff::pow(1, -huge), ExactRational(1));
}
