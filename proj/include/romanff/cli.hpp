#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace romanff::cli {

enum class OutputFormat { Csv, Tsv, Json, Pretty };

std::optional<OutputFormat> parse_format(std::string_view text) noexcept;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest number of rows a single table or verify invocation may produce.
inline constexpr long kMaxRangeRows = 100'000;
/// Largest number of samples ff or fourier may produce.
inline constexpr long kMaxSamples = 1'000'000;

/// Runs one command line (without the program name). Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace romanff::cli
