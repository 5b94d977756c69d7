#pragma once

// The ten foundational functions over exact rationals. Each is built from the
// previous ones exactly as composed (delta -> theta -> xi ...) rather than
// from a shortcut comparison, so the alternative forms can be checked against
// the canonical chain.

#include <array>
#include <optional>
#include <string_view>

#include "romanff/exact_num.hpp"

namespace romanff {

/// Offset added to the floor inside delta; 0 < value < 1.
class Epsilon {
 public:
  /// Throws InvalidEpsilon unless 0 < value < 1.
  explicit Epsilon(ExactRational value);

  static Epsilon half() { return Epsilon(ExactRational::normalize(1, 2)); }

  const ExactRational& value() const noexcept { return value_; }

 private:
  ExactRational value_;
};

ExactInt ff_floor(const ExactRational& x);
ExactInt ff_ceil(const ExactRational& x);

ExactRational delta(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational theta(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational xi(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational xi_prime(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational eta(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational cap_theta(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational q(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational q_prime(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational psi(const ExactRational& x, const Epsilon& eps = Epsilon::half());
ExactRational phi(const ExactRational& x, const Epsilon& eps = Epsilon::half());

// Alternative forms, in the order they are listed:
//   cap_theta: (θ(x)+θ(-x))/2, (ξ(x)+ξ(-x))/2, (1+θ(x)θ(-x))/2, (1+θ(-|x|))/2, ξ(-|x|)
//   q:         (θ(x)-θ(-x))/2, ξ(x)-ξ(-x), ξ'(-x)-ξ'(x)
//   q_prime:   1-Θ(x), (1-θ(x)θ(-x))/2, ξ'(-|x|)
// The second cap_theta form is not an identity: it yields 1/2 for every x != 0.
std::array<ExactRational, 5> cap_theta_alternatives(const ExactRational& x, const Epsilon& eps = Epsilon::half());
std::array<ExactRational, 3> q_alternatives(const ExactRational& x, const Epsilon& eps = Epsilon::half());
std::array<ExactRational, 3> q_prime_alternatives(const ExactRational& x, const Epsilon& eps = Epsilon::half());

enum class FfName { Delta, Theta, Xi, XiPrime, Eta, CapTheta, Q, QPrime, Psi, Phi };

inline constexpr std::array<FfName, 10> kAllFunctions = {
    FfName::Delta,    FfName::Theta, FfName::Xi,     FfName::XiPrime, FfName::Eta,
    FfName::CapTheta, FfName::Q,     FfName::QPrime, FfName::Psi,     FfName::Phi,
};

/// Stable identifier: delta, theta, xi, xi_prime, eta, cap_theta, q, q_prime, psi, phi.
std::string_view name(FfName fn) noexcept;
std::optional<FfName> parse_ff_name(std::string_view text) noexcept;
/// Throws UnknownFunction.
FfName ff_from_name(std::string_view text);

ExactRational evaluate(FfName fn, const ExactRational& x, const Epsilon& eps = Epsilon::half());

enum class OutputSymbol { MinusOne, Zero, One, AnyNegative, AnyPositive, PlusOrMinusOne, IdentityN };

/// "-1", "0", "1", "-", "+", "±1", "n".
std::string_view to_string(OutputSymbol symbol) noexcept;

/// Output class of a function over (negative, zero, positive) inputs.
struct TernaryPattern {
  OutputSymbol at_negative;
  OutputSymbol at_zero;
  OutputSymbol at_positive;

  friend bool operator==(const TernaryPattern&, const TernaryPattern&) = default;
};

/// Samples a function on each input sign and classifies the outputs.
/// Throws ClassificationFailed if a slot's samples fit no single symbol.
TernaryPattern pattern_of(FfName fn, const Epsilon& eps = Epsilon::half());
/// Throws UnknownFunction for names outside the ten identifiers.
TernaryPattern pattern_of(std::string_view fn, const Epsilon& eps = Epsilon::half());

}  // namespace romanff
