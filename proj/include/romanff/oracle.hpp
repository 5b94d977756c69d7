#pragma once

/**
 * @file oracle.hpp
 * @brief Cross-definition verification and table generation.
 *
 * Every DefinitionKind is compared against the closed form (roman_piecewise).
 * Formulas known to disagree with it are listed once in a static registry, so
 * a report can tell a faithful-but-wrong formula from an implementation bug.
 */

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romanff/core_ff.hpp"
#include "romanff/exact_num.hpp"
#include "romanff/roman.hpp"

namespace romanff::oracle {

inline constexpr DefinitionKind kReference = DefinitionKind::Piecewise;

/// Values indexed by DefinitionKind, in kAllDefinitions order.
struct KindValues {
  ExactInt n;
  std::array<ExactRational, kAllDefinitions.size()> values;

  const ExactRational& operator[](DefinitionKind kind) const { return values[static_cast<std::size_t>(kind)]; }
};

/// Evaluates all eight definitions at n. An evaluator failure is rethrown
/// with the same error code and the kind's name prepended to the message.
KindValues evaluate_all(const ExactInt& n);

struct KnownDiscrepancyRule {
  DefinitionKind kind;
  /// Inclusive upper bound: the rule covers every n <= max_n.
  long max_n;
  std::string_view citation;

  bool covers(DefinitionKind k, const ExactInt& n) const { return k == kind && n <= ExactInt(max_n); }
};

std::span<const KnownDiscrepancyRule> known_discrepancy_rules() noexcept;
bool is_known_discrepancy(DefinitionKind kind, const ExactInt& n);

struct KnownDiscrepancy {
  DefinitionKind kind;
  ExactInt n;
  ExactRational expected;
  ExactRational got;
};

/// Something the registry did not predict: a mismatch outside it, or a
/// kind that matched where the registry says it cannot.
struct UnexpectedResult {
  DefinitionKind kind;
  ExactInt n;
  ExactRational expected;
  ExactRational got;
  bool matched;
};

struct VerificationRow {
  KindValues values;
  /// True iff every kind outside the registry equals the reference.
  bool agreeing = true;
  /// Every kind whose value differs from the reference, known or not.
  std::vector<DefinitionKind> mismatched_kinds;
};

struct VerificationReport {
  ExactInt from;
  ExactInt to;
  std::vector<VerificationRow> rows;
  std::vector<KnownDiscrepancy> known_discrepancies;
  std::vector<UnexpectedResult> unexpected;

  bool ok() const noexcept { return unexpected.empty(); }
};

/// Rows for every integer in [from, to], ascending. Throws InvalidRange when
/// from > to. `threads` = 0 uses the hardware concurrency; the result does
/// not depend on the thread count.
VerificationReport verify_range(const ExactInt& from, const ExactInt& to, unsigned threads = 0);

struct PatternRow {
  FfName function;
  TernaryPattern pattern;
};

/// Ten rows in the order delta, theta, xi, xi', eta, Theta, Q, Q', Psi, Phi.
std::vector<PatternRow> ff_pattern_table(const Epsilon& eps = Epsilon::half());

struct BinaryRow {
  std::string expression;
  std::string bits;
  int decimal = 0;
};

/// The eight expressions whose outputs at (-1, 0, 1) read as 000..111.
std::vector<BinaryRow> ff_binary_table(const Epsilon& eps = Epsilon::half());

enum class AltFamily { CapTheta, Q, QPrime };

std::string_view name(AltFamily family) noexcept;

struct Counterexample {
  ExactRational x;
  ExactRational value;
  ExactRational expected;
};

struct AltEquivalenceRow {
  AltFamily family;
  /// 1-based position in the family's list of forms.
  int form = 0;
  bool matches = true;
  std::size_t mismatch_count = 0;
  /// Simplest failing input: integers before non-integers, then smaller |x|,
  /// then positive before negative.
  std::optional<Counterexample> counterexample;
};

/// Integers and half-integers in [-5, 5].
std::vector<ExactRational> default_alt_grid();

/// One row per alternative form across the three families, checked on
/// default_alt_grid().
std::vector<AltEquivalenceRow> alt_equivalence_report(const Epsilon& eps = Epsilon::half());
/// Same, on a caller-supplied grid. Throws InvalidRange when it is empty.
std::vector<AltEquivalenceRow> alt_equivalence_report(const Epsilon& eps, std::span<const ExactRational> grid);

}  // namespace romanff::oracle
