#include "romanff/core_ff.hpp"

#include <string>
#include <vector>

#include "romanff/error.hpp"

namespace romanff {

namespace {

const ExactRational kOne(1);
const ExactRational kTwo(2);

// Exponents produced by the F.F. chain are always integral.
const ExactInt& integral(const ExactRational& v) { return v.numerator(); }

struct Slot {
  std::vector<ExactRational> inputs;
};

// Two samples per nonzero slot as a minimum; -1 is added on the negative side
// because eta agrees at -2 and -1/2 (both -1) and only alternates at -1.
const std::array<Slot, 3>& sample_slots() {
  static const std::array<Slot, 3> slots = {
      Slot{{ExactRational(-2), ExactRational(-1), ExactRational::normalize(-1, 2)}},
      Slot{{ExactRational(0)}},
      Slot{{ExactRational(3), ExactRational::normalize(1, 2)}},
  };
  return slots;
}

std::optional<OutputSymbol> constant_symbol(const ExactRational& v) {
  if (v == ExactRational(-1)) return OutputSymbol::MinusOne;
  if (v.is_zero()) return OutputSymbol::Zero;
  if (v == kOne) return OutputSymbol::One;
  return std::nullopt;
}

OutputSymbol classify(FfName fn, const Slot& slot, const Epsilon& eps) {
  std::vector<ExactRational> outputs;
  for (const auto& x : slot.inputs) outputs.push_back(evaluate(fn, x, eps));

  auto all = [&](auto&& pred) {
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      if (!pred(slot.inputs[i], outputs[i])) return false;
    }
    return true;
  };

  const bool uniform = all([&](const auto&, const auto& v) { return v == outputs.front(); });
  if (auto c = constant_symbol(outputs.front()); c && uniform) return *c;
  if (all([](const auto& x, const auto& v) { return v == x; })) return OutputSymbol::IdentityN;
  if (!uniform && all([](const auto&, const auto& v) { return v.abs() == kOne; })) {
    return OutputSymbol::PlusOrMinusOne;
  }
  if (all([](const auto&, const auto& v) { return v.sign() < 0; })) return OutputSymbol::AnyNegative;
  if (all([](const auto&, const auto& v) { return v.sign() > 0; })) return OutputSymbol::AnyPositive;

  std::string seen;
  for (const auto& v : outputs) seen += (seen.empty() ? "" : ", ") + v.to_string();
  throw Error(Errc::ClassificationFailed, std::string(name(fn)) + " has inconsistent outputs {" + seen + "}");
}

}  // namespace

Epsilon::Epsilon(ExactRational value) : value_(std::move(value)) {
  if (value_.sign() <= 0 || value_ >= ExactRational(1)) {
    throw Error(Errc::InvalidEpsilon, "epsilon must lie in (0, 1), got " + value_.to_string());
  }
}

ExactInt ff_floor(const ExactRational& x) { return x.floor(); }
ExactInt ff_ceil(const ExactRational& x) { return x.ceil(); }

ExactRational delta(const ExactRational& x, const Epsilon& eps) { return ExactRational(ff_floor(x)) + eps.value(); }

ExactRational theta(const ExactRational& x, const Epsilon& eps) {
  ExactRational d = delta(x, eps);
  return d / d.abs();
}

ExactRational xi(const ExactRational& x, const Epsilon& eps) { return (kOne + theta(x, eps)) / kTwo; }

ExactRational xi_prime(const ExactRational& x, const Epsilon& eps) { return (kOne - theta(x, eps)) / kTwo; }

ExactRational eta(const ExactRational& x, const Epsilon& eps) {
  return pow(theta(x, eps), -ff_ceil(x) - ExactInt(1));
}

ExactRational cap_theta(const ExactRational& x, const Epsilon& eps) { return xi(x, eps) * xi(-x, eps); }

ExactRational q(const ExactRational& x, const Epsilon& eps) { return theta(x, eps) - cap_theta(x, eps); }

ExactRational q_prime(const ExactRational& x, const Epsilon& eps) { return q(x, eps).abs(); }

ExactRational psi(const ExactRational& x, const Epsilon& eps) { return x + cap_theta(x, eps); }

ExactRational phi(const ExactRational& x, const Epsilon& eps) {
  return pow(psi(x, eps), integral(xi_prime(x, eps)));
}

std::array<ExactRational, 5> cap_theta_alternatives(const ExactRational& x, const Epsilon& eps) {
  const ExactRational neg_abs = -x.abs();
  return {
      (theta(x, eps) + theta(-x, eps)) / kTwo,
      (xi(x, eps) + xi(-x, eps)) / kTwo,
      (kOne + theta(x, eps) * theta(-x, eps)) / kTwo,
      (kOne + theta(neg_abs, eps)) / kTwo,
      xi(neg_abs, eps),
  };
}

std::array<ExactRational, 3> q_alternatives(const ExactRational& x, const Epsilon& eps) {
  return {
      (theta(x, eps) - theta(-x, eps)) / kTwo,
      xi(x, eps) - xi(-x, eps),
      xi_prime(-x, eps) - xi_prime(x, eps),
  };
}

std::array<ExactRational, 3> q_prime_alternatives(const ExactRational& x, const Epsilon& eps) {
  return {
      kOne - cap_theta(x, eps),
      (kOne - theta(x, eps) * theta(-x, eps)) / kTwo,
      xi_prime(-x.abs(), eps),
  };
}

std::string_view name(FfName fn) noexcept {
  switch (fn) {
    case FfName::Delta: return "delta";
    case FfName::Theta: return "theta";
    case FfName::Xi: return "xi";
    case FfName::XiPrime: return "xi_prime";
    case FfName::Eta: return "eta";
    case FfName::CapTheta: return "cap_theta";
    case FfName::Q: return "q";
    case FfName::QPrime: return "q_prime";
    case FfName::Psi: return "psi";
    case FfName::Phi: return "phi";
  }
  return "";
}

std::optional<FfName> parse_ff_name(std::string_view text) noexcept {
  for (FfName fn : kAllFunctions) {
    if (name(fn) == text) return fn;
  }
  return std::nullopt;
}

FfName ff_from_name(std::string_view text) {
  if (auto fn = parse_ff_name(text)) return *fn;
  throw Error(Errc::UnknownFunction, "unknown function '" + std::string(text) + "'");
}

ExactRational evaluate(FfName fn, const ExactRational& x, const Epsilon& eps) {
  switch (fn) {
    case FfName::Delta: return delta(x, eps);
    case FfName::Theta: return theta(x, eps);
    case FfName::Xi: return xi(x, eps);
    case FfName::XiPrime: return xi_prime(x, eps);
    case FfName::Eta: return eta(x, eps);
    case FfName::CapTheta: return cap_theta(x, eps);
    case FfName::Q: return q(x, eps);
    case FfName::QPrime: return q_prime(x, eps);
    case FfName::Psi: return psi(x, eps);
    case FfName::Phi: return phi(x, eps);
  }
  throw Error(Errc::UnknownFunction, "unhandled function");
}

std::string_view to_string(OutputSymbol symbol) noexcept {
  switch (symbol) {
    case OutputSymbol::MinusOne: return "-1";
    case OutputSymbol::Zero: return "0";
    case OutputSymbol::One: return "1";
    case OutputSymbol::AnyNegative: return "-";
    case OutputSymbol::AnyPositive: return "+";
    case OutputSymbol::PlusOrMinusOne: return "±1";
    case OutputSymbol::IdentityN: return "n";
  }
  return "?";
}

TernaryPattern pattern_of(FfName fn, const Epsilon& eps) {
  const auto& slots = sample_slots();
  return {classify(fn, slots[0], eps), classify(fn, slots[1], eps), classify(fn, slots[2], eps)};
}

TernaryPattern pattern_of(std::string_view fn, const Epsilon& eps) { return pattern_of(ff_from_name(fn), eps); }

}  // namespace romanff
