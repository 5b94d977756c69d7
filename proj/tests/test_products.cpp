#include <gtest/gtest.h>

#include <random>

#include "romanff/core_ff.hpp"
#include "romanff/error.hpp"
#include "romanff/products.hpp"
#include "romanff/roman.hpp"

using namespace romanff;

namespace {

ExactRational rat(long p, long q = 1) { return ExactRational::normalize(p, q); }

template <typename F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

ProductFactor identity() {
  return [](const ExactInt& k) { return ExactRational(k); };
}

}  // namespace

TEST(PiProduct, Examples) {
  EXPECT_EQ(pi_product({3, 2, identity()}), rat(1));
  EXPECT_EQ(pi_product({5, 5, identity()}), rat(5));
  EXPECT_EQ(pi_product({1, 6, [](const ExactInt& k) { return ExactRational(k * k); }}), rat(1 * 4 * 9 * 16 * 25 * 36));
  EXPECT_EQ(pi_product({1, 6, [](const ExactInt& k) { return ExactRational(k * k); }}), rat(518400));
}

TEST(PiProduct, EmptyRangeIgnoresFactor) {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long> lower(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<long> gap(1, 1'000'000);
  for (int i = 0; i < 100; ++i) {
    const long lo = lower(rng);
    const long hi = lo - gap(rng);
    bool called = false;
    const ProductFactor hostile = [&](const ExactInt&) -> ExactRational {
      called = true;
      throw Error(Errc::DivisionByZero, "should not be evaluated");
    };
    EXPECT_EQ(pi_product({lo, hi, hostile}), rat(1));
    EXPECT_FALSE(called);
  }
}

TEST(PiProduct, FactorFailureIsReported) {
  const ProductFactor reciprocal = [](const ExactInt& k) { return ExactRational(k).reciprocal(); };
  expect_error(Errc::FactorUndefined, [&] { pi_product({-2, 2, reciprocal}); });
  const ProductFactor throws_other = [](const ExactInt&) -> ExactRational { throw std::runtime_error("boom"); };
  expect_error(Errc::FactorUndefined, [&] { pi_product({0, 0, throws_other}); });
}

TEST(PiProduct, LimitCap) {
  expect_error(Errc::LimitExceeded, [] { pi_product({1, 1'000'001, identity()}); });
  expect_error(Errc::LimitExceeded, [] { pi_product({-2'000'000, 3, identity()}); });
  expect_error(Errc::LimitExceeded, [] { pi_product({1, 20, identity()}, 10); });
  EXPECT_EQ(pi_product({1, 10, identity()}, 10), rat(3628800));
}

TEST(PosProducts, Examples) {
  EXPECT_EQ(rising_pos(3), rat(6));
  EXPECT_EQ(falling_pos(3), rat(6));
  EXPECT_EQ(rising_pos(0), rat(1));
  EXPECT_EQ(falling_pos(0), rat(1));
  EXPECT_EQ(rising_pos(8), rat(40320));
  EXPECT_EQ(falling_pos(8), rat(40320));
  expect_error(Errc::NegativeInput, [] { rising_pos(-1); });
  expect_error(Errc::NegativeInput, [] { falling_pos(-1); });
}

TEST(PosProducts, MatchFactorial) {
  for (long n = 0; n <= 100; ++n) {
    const ExactRational f(int_factorial(n));
    EXPECT_EQ(rising_pos(n), f);
    EXPECT_EQ(falling_pos(n), f);
  }
}

TEST(NegProducts, Examples) {
  EXPECT_EQ(rising_neg(-3), rat(1, 2));
  EXPECT_EQ(falling_neg(-1), rat(1));
  EXPECT_EQ(rising_neg(-6), rat(-1, 120));
  expect_error(Errc::NonNegativeInput, [] { rising_neg(0); });
  expect_error(Errc::NonNegativeInput, [] { falling_neg(4); });
}

TEST(NegProducts, MatchClosedForm) {
  for (long n = -200; n <= -1; ++n) {
    EXPECT_EQ(rising_neg(n), roman_piecewise(n)) << n;
    EXPECT_EQ(falling_neg(n), roman_piecewise(n)) << n;
  }
}

TEST(GeneralizedProducts, Examples) {
  EXPECT_EQ(roman_rising_gen(-1), rat(1));
  EXPECT_EQ(roman_falling_gen(0), rat(1));
  EXPECT_EQ(roman_rising_gen(5), rat(120));
  EXPECT_EQ(roman_rising_alt(-4), rat(-1, 6));
  EXPECT_EQ(roman_rising_alt(0), rat(1));
  EXPECT_EQ(roman_falling_alt(-2), rat(-1, 2));
}

TEST(GeneralizedProducts, AgreeWithClosedForm) {
  for (long n = -200; n <= 200; ++n) {
    const ExactRational expected = roman_piecewise(n);
    EXPECT_EQ(roman_rising_gen(n), expected) << n;
    EXPECT_EQ(roman_falling_gen(n), expected) << n;
    EXPECT_EQ(roman_rising_alt(n), expected) << n;
  }
}

TEST(FallingAlt, AgreesForNonNegativeAndMinusOne) {
  for (long n = -1; n <= 200; ++n) EXPECT_EQ(roman_falling_alt(n), roman_piecewise(n)) << n;
}

TEST(FallingAlt, DisagreesBelowMinusOne) {
  for (long n = -50; n <= -2; ++n) EXPECT_NE(roman_falling_alt(n), roman_piecewise(n)) << n;
}

TEST(FallingAlt, MissingFactorPattern) {
  // Literal form equals the closed form times -1/n: the 1/(-1) factor is dropped, 1/n is added.
  for (long n = -50; n <= -2; ++n) {
    EXPECT_EQ(roman_falling_alt(n), roman_piecewise(n) * rat(-1, n)) << n;
  }
}

TEST(Products, NoZeroToNegativePower) {
  for (long n = -60; n <= 60; ++n) {
    EXPECT_NO_THROW(roman_rising_gen(n));
    EXPECT_NO_THROW(roman_falling_gen(n));
    EXPECT_NO_THROW(roman_rising_alt(n));
    EXPECT_NO_THROW(roman_falling_alt(n));
    EXPECT_NO_THROW(phi(ExactRational(n)));
  }
}
