#pragma once

// Truncated Fourier series for the sawtooth {x}, the floor, and delta.
// Everything here is binary64; the exact functions live in core_ff.

#include <cstdint>

namespace romanff {

class FourierConfig {
 public:
  static constexpr std::int64_t kMaxTerms = 1'000'000;
  static constexpr double kDefaultEpsilon = 0.75;

  /// Throws InvalidConfig unless 1 <= terms <= kMaxTerms and 1/2 < epsilon < 1.
  explicit FourierConfig(std::int64_t terms, double epsilon = kDefaultEpsilon);

  std::int64_t terms() const noexcept { return terms_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  std::int64_t terms_;
  double epsilon_;
};

/// x - floor(x), in [0, 1).
double sawtooth_exact(double x);

/// 1/2 - (1/pi) * sum_{k=1}^{K} sin(2 pi k x) / k
double sawtooth_fourier(double x, const FourierConfig& cfg);

/// x - sawtooth_fourier(x); equals n - 1/2 at integers.
double floor_fourier(double x, const FourierConfig& cfg);

/// floor_fourier(x) + epsilon.
double delta_fourier(double x, const FourierConfig& cfg);

}  // namespace romanff
