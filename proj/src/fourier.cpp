#include "romanff/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "romanff/error.hpp"

namespace romanff {

namespace {

void require_finite(double x) {
  if (!std::isfinite(x)) throw Error(Errc::NonFiniteInput, "input must be finite");
}

// sum_{k=1}^{K} sin(2 pi k x) / k, increasing k. The phase k*x is reduced
// mod 1 first so integer x contributes exact zeros.
double sine_series(double x, std::int64_t terms) {
  double sum = 0.0;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const double phase = static_cast<double>(k) * x;
    const double reduced = phase - std::round(phase);
    sum += std::sin(2.0 * std::numbers::pi * reduced) / static_cast<double>(k);
  }
  return sum;
}

}  // namespace

FourierConfig::FourierConfig(std::int64_t terms, double epsilon) : terms_(terms), epsilon_(epsilon) {
  if (terms < 1 || terms > kMaxTerms) {
    throw Error(Errc::InvalidConfig, "terms must be in [1, " + std::to_string(kMaxTerms) + "], got " +
                                         std::to_string(terms));
  }
  if (!(epsilon > 0.5 && epsilon < 1.0)) {
    throw Error(Errc::InvalidConfig, "epsilon must lie in (1/2, 1), got " + std::to_string(epsilon));
  }
}

double sawtooth_exact(double x) {
  require_finite(x);
  return x - std::floor(x);
}

double sawtooth_fourier(double x, const FourierConfig& cfg) {
  require_finite(x);
  return 0.5 - sine_series(x, cfg.terms()) / std::numbers::pi;
}

double floor_fourier(double x, const FourierConfig& cfg) { return x - sawtooth_fourier(x, cfg); }

double delta_fourier(double x, const FourierConfig& cfg) { return floor_fourier(x, cfg) + cfg.epsilon(); }

}  // namespace romanff
