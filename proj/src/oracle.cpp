#include "romanff/oracle.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <tuple>

#include "romanff/error.hpp"

namespace romanff::oracle {

namespace {

constexpr std::array<KnownDiscrepancyRule, 1> kRules = {{
    {DefinitionKind::FallingAlt, -2,
     "alternative-generalization falling product, evaluated literally, drops the 1/(-1) factor and "
     "includes 1/n, e.g. n = -2 gives -1/2 instead of -1"},
}};

VerificationRow check_row(const ExactInt& n) {
  VerificationRow row{evaluate_all(n), true, {}};
  const ExactRational& expected = row.values[kReference];
  for (DefinitionKind kind : kAllDefinitions) {
    if (row.values[kind] == expected) continue;
    row.mismatched_kinds.push_back(kind);
    if (!is_known_discrepancy(kind, n)) row.agreeing = false;
  }
  return row;
}

std::vector<VerificationRow> check_rows(const ExactInt& from, std::size_t count, unsigned threads) {
  std::vector<VerificationRow> rows(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  // Strided assignment: worker w owns rows w, w + threads, ...
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += threads) rows[i] = check_row(from + ExactInt(i));
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

int bit(const ExactRational& v) { return v == ExactRational(1) ? 1 : 0; }

// Ordering for picking the simplest counterexample.
bool simpler(const ExactRational& a, const ExactRational& b) {
  auto key = [](const ExactRational& x) { return std::make_tuple(!x.is_integer(), x.abs(), x.sign() < 0); };
  return key(a) < key(b);
}

}  // namespace

KindValues evaluate_all(const ExactInt& n) {
  KindValues out{n, {}};
  for (DefinitionKind kind : kAllDefinitions) {
    try {
      out.values[static_cast<std::size_t>(kind)] = roman_factorial(n, kind);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(name(kind)) + " at n = " + n.to_string() + ": " + e.what());
    }
  }
  return out;
}

std::span<const KnownDiscrepancyRule> known_discrepancy_rules() noexcept { return kRules; }

bool is_known_discrepancy(DefinitionKind kind, const ExactInt& n) {
  return std::any_of(kRules.begin(), kRules.end(), [&](const auto& rule) { return rule.covers(kind, n); });
}

VerificationReport verify_range(const ExactInt& from, const ExactInt& to, unsigned threads) {
  if (to < from) {
    throw Error(Errc::InvalidRange, "empty range [" + from.to_string() + ", " + to.to_string() + "]");
  }
  const auto span = (to - from).to_long();
  if (!span) throw Error(Errc::LimitExceeded, "range too large");

  VerificationReport report{from, to, check_rows(from, static_cast<std::size_t>(*span) + 1, threads), {}, {}};
  for (const auto& row : report.rows) {
    const ExactInt& n = row.values.n;
    const ExactRational& expected = row.values[kReference];
    for (DefinitionKind kind : kAllDefinitions) {
      const ExactRational& got = row.values[kind];
      const bool matched = got == expected;
      const bool known = is_known_discrepancy(kind, n);
      if (!matched && known) {
        report.known_discrepancies.push_back({kind, n, expected, got});
      } else if (matched == known) {
        report.unexpected.push_back({kind, n, expected, got, matched});
      }
    }
  }
  return report;
}

std::vector<PatternRow> ff_pattern_table(const Epsilon& eps) {
  std::vector<PatternRow> rows;
  for (FfName fn : kAllFunctions) rows.push_back({fn, pattern_of(fn, eps)});
  return rows;
}

std::vector<BinaryRow> ff_binary_table(const Epsilon& eps) {
  using Expr = std::function<ExactRational(const ExactRational&)>;
  const std::vector<std::pair<std::string, Expr>> exprs = {
      {"0", [](const ExactRational&) { return ExactRational(0); }},
      {"xi_prime(-n)", [&](const ExactRational& x) { return xi_prime(-x, eps); }},
      {"cap_theta(n)", [&](const ExactRational& x) { return cap_theta(x, eps); }},
      {"xi(n)", [&](const ExactRational& x) { return xi(x, eps); }},
      {"xi_prime(n)", [&](const ExactRational& x) { return xi_prime(x, eps); }},
      {"q_prime(n)", [&](const ExactRational& x) { return q_prime(x, eps); }},
      {"xi(-n)", [&](const ExactRational& x) { return xi(-x, eps); }},
      {"1", [](const ExactRational&) { return ExactRational(1); }},
  };

  std::vector<BinaryRow> rows;
  for (const auto& [label, expr] : exprs) {
    BinaryRow row{label, "", 0};
    for (int x : {-1, 0, 1}) {
      const int b = bit(expr(ExactRational(x)));
      row.bits.push_back(static_cast<char>('0' + b));
      row.decimal = row.decimal * 2 + b;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view name(AltFamily family) noexcept {
  switch (family) {
    case AltFamily::CapTheta: return "cap_theta";
    case AltFamily::Q: return "q";
    case AltFamily::QPrime: return "q_prime";
  }
  return "";
}

std::vector<ExactRational> default_alt_grid() {
  std::vector<ExactRational> grid;
  for (int twice = -10; twice <= 10; ++twice) grid.push_back(ExactRational::normalize(twice, 2));
  return grid;
}

std::vector<AltEquivalenceRow> alt_equivalence_report(const Epsilon& eps) {
  const auto grid = default_alt_grid();
  return alt_equivalence_report(eps, grid);
}

std::vector<AltEquivalenceRow> alt_equivalence_report(const Epsilon& eps, std::span<const ExactRational> grid) {
  if (grid.empty()) throw Error(Errc::InvalidRange, "alternative-form grid is empty");

  std::vector<AltEquivalenceRow> rows;
  auto check = [&](AltFamily family, std::size_t forms, auto&& canonical, auto&& alternatives) {
    for (std::size_t f = 0; f < forms; ++f) {
      AltEquivalenceRow row{family, static_cast<int>(f + 1), true, 0, std::nullopt};
      for (const auto& x : grid) {
        const ExactRational expected = canonical(x, eps);
        const ExactRational value = alternatives(x, eps)[f];
        if (value == expected) continue;
        row.matches = false;
        ++row.mismatch_count;
        if (!row.counterexample || simpler(x, row.counterexample->x)) row.counterexample = {x, value, expected};
      }
      rows.push_back(std::move(row));
    }
  };

  using R = const ExactRational&;
  using E = const Epsilon&;
  check(AltFamily::CapTheta, 5, [](R x, E e) { return cap_theta(x, e); },
        [](R x, E e) { return cap_theta_alternatives(x, e); });
  check(AltFamily::Q, 3, [](R x, E e) { return q(x, e); }, [](R x, E e) { return q_alternatives(x, e); });
  check(AltFamily::QPrime, 3, [](R x, E e) { return q_prime(x, e); },
        [](R x, E e) { return q_prime_alternatives(x, e); });
  return rows;
}

}  // namespace romanff::oracle
