#include "romanff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "romanff/core_ff.hpp"
#include "romanff/error.hpp"
#include "romanff/fourier.hpp"
#include "romanff/oracle.hpp"
#include "romanff/products.hpp"
#include "romanff/roman.hpp"

namespace romanff::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputFormat format_from(const std::string& text) {
  if (auto f = parse_format(text)) return *f;
  throw UsageError("unknown format '" + text + "' (expected csv, tsv, json or pretty)");
}

DefinitionKind definition_from(const std::string& text) {
  if (auto kind = parse_definition(text)) return *kind;
  throw UsageError("unknown definition '" + text + "'");
}

ExactInt bounded_integer(const std::string& text) {
  ExactInt n = ExactInt::parse(text);
  if (n.abs() > ExactInt(kDefaultLimitCap)) {
    throw UsageError("|" + text + "| exceeds the limit " + std::to_string(kDefaultLimitCap));
  }
  return n;
}

void check_row_count(const ExactInt& from, const ExactInt& to) {
  if (to < from) throw UsageError("--from must not exceed --to");
  if (to - from + 1 > ExactInt(kMaxRangeRows)) {
    throw UsageError("range exceeds " + std::to_string(kMaxRangeRows) + " rows");
  }
}

char separator(OutputFormat f) { return f == OutputFormat::Tsv ? '\t' : ','; }

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

ordered_json json_integer(const ExactInt& n) {
  // Inputs are capped well inside the int64 range.
  return *n.to_long();
}

// Writes a two-column dataset in the requested format.
void write_columns(std::ostream& out, OutputFormat fmt, const std::string& key_name, const std::string& value_name,
                   const std::vector<std::pair<std::string, std::string>>& rows, const std::string& pretty_sep,
                   const ordered_json& json_meta, bool json_values_are_numbers = false) {
  switch (fmt) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
      const char sep = separator(fmt);
      out << key_name << sep << value_name << '\n';
      for (const auto& [k, v] : rows) out << k << sep << v << '\n';
      return;
    }
    case OutputFormat::Json: {
      ordered_json doc = json_meta;
      doc["rows"] = ordered_json::array();
      for (const auto& [k, v] : rows) {
        ordered_json row;
        row[key_name] = k;
        if (json_values_are_numbers) {
          row[value_name] = std::stod(v);
        } else {
          row[value_name] = v;
        }
        doc["rows"].push_back(std::move(row));
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::Pretty:
      for (const auto& [k, v] : rows) out << k << pretty_sep << v << '\n';
      return;
  }
}

int cmd_eval(std::ostream& out, const std::string& n_text, const std::string& def) {
  const DefinitionKind kind = definition_from(def);
  out << roman_factorial(bounded_integer(n_text), kind) << '\n';
  return kExitOk;
}

int cmd_table(std::ostream& out, const std::string& from_text, const std::string& to_text, const std::string& def,
              const std::string& format) {
  const DefinitionKind kind = definition_from(def);
  const OutputFormat fmt = format_from(format);
  const ExactInt from = bounded_integer(from_text);
  const ExactInt to = bounded_integer(to_text);
  check_row_count(from, to);

  std::vector<std::pair<std::string, std::string>> rows;
  for (ExactInt n = from; n <= to; n += 1) rows.emplace_back(n.to_string(), roman_factorial(n, kind).to_string());

  if (fmt == OutputFormat::Json) {
    ordered_json doc;
    doc["definition"] = name(kind);
    doc["rows"] = ordered_json::array();
    for (const auto& [n, v] : rows) doc["rows"].push_back({{"n", json_integer(ExactInt::parse(n))}, {"value", v}});
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (fmt == OutputFormat::Pretty) out << "n → [n]! (" << name(kind) << ")\n";
  write_columns(out, fmt, "n", std::string(name(kind)), rows, " → ", {});
  return kExitOk;
}

std::string joined_kinds(const std::vector<DefinitionKind>& kinds, char sep) {
  std::string s;
  for (DefinitionKind k : kinds) {
    if (!s.empty()) s += sep;
    s += name(k);
  }
  return s;
}

int cmd_verify(std::ostream& out, const std::string& from_text, const std::string& to_text,
               const std::string& format) {
  const OutputFormat fmt = format_from(format);
  const ExactInt from = bounded_integer(from_text);
  const ExactInt to = bounded_integer(to_text);
  check_row_count(from, to);

  const oracle::VerificationReport report = oracle::verify_range(from, to);

  switch (fmt) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
      const char sep = separator(fmt);
      out << 'n';
      for (DefinitionKind k : kAllDefinitions) out << sep << name(k);
      out << sep << "agreeing" << sep << "mismatched" << '\n';
      for (const auto& row : report.rows) {
        out << row.values.n;
        for (DefinitionKind k : kAllDefinitions) out << sep << row.values[k];
        out << sep << (row.agreeing ? "true" : "false") << sep << joined_kinds(row.mismatched_kinds, ';') << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["from"] = json_integer(report.from);
      doc["to"] = json_integer(report.to);
      doc["reference"] = name(oracle::kReference);
      doc["ok"] = report.ok();
      doc["rows"] = ordered_json::array();
      for (const auto& row : report.rows) {
        ordered_json values;
        for (DefinitionKind k : kAllDefinitions) values[std::string(name(k))] = row.values[k].to_string();
        ordered_json mismatched = ordered_json::array();
        for (DefinitionKind k : row.mismatched_kinds) mismatched.push_back(name(k));
        doc["rows"].push_back({{"n", json_integer(row.values.n)},
                               {"values", values},
                               {"agreeing", row.agreeing},
                               {"mismatched_kinds", mismatched}});
      }
      doc["known_discrepancies"] = ordered_json::array();
      for (const auto& d : report.known_discrepancies) {
        doc["known_discrepancies"].push_back({{"kind", name(d.kind)},
                                              {"n", json_integer(d.n)},
                                              {"expected", d.expected.to_string()},
                                              {"got", d.got.to_string()}});
      }
      doc["unexpected"] = ordered_json::array();
      for (const auto& u : report.unexpected) {
        doc["unexpected"].push_back({{"kind", name(u.kind)},
                                     {"n", json_integer(u.n)},
                                     {"expected", u.expected.to_string()},
                                     {"got", u.got.to_string()},
                                     {"matched", u.matched}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      out << "range [" << report.from << ", " << report.to << "], " << report.rows.size()
          << " rows, reference " << name(oracle::kReference) << '\n';
      out << "unexpected results: " << report.unexpected.size() << '\n';
      for (const auto& u : report.unexpected) {
        out << "  " << name(u.kind) << " n=" << u.n << " expected " << u.expected << " got " << u.got
            << (u.matched ? " (matched a registered discrepancy)" : "") << '\n';
      }
      out << "known discrepancies: " << report.known_discrepancies.size() << '\n';
      for (const auto& d : report.known_discrepancies) {
        out << "  " << name(d.kind) << " n=" << d.n << " expected " << d.expected << " got " << d.got << '\n';
      }
      out << (report.ok() ? "OK" : "FAILED") << '\n';
      break;
    }
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

template <typename T>
std::vector<T> sample_points(const T& from, const T& to, const T& step) {
  if (!(step > T(0))) throw UsageError("--step must be positive");
  if (to < from) throw UsageError("--from must not exceed --to");
  std::vector<T> xs;
  for (long i = 0;; ++i) {
    T x = from + step * T(i);
    if (x > to) break;
    if (static_cast<long>(xs.size()) >= kMaxSamples) {
      throw UsageError("more than " + std::to_string(kMaxSamples) + " samples");
    }
    xs.push_back(std::move(x));
  }
  return xs;
}

int cmd_ff(std::ostream& out, const std::string& fn_text, const std::string& from_text, const std::string& to_text,
           const std::string& step_text, const std::string& eps_text, const std::string& format) {
  const auto fn = parse_ff_name(fn_text);
  if (!fn) throw UsageError("unknown function '" + fn_text + "'");
  const OutputFormat fmt = format_from(format);
  const Epsilon eps(ExactRational::parse(eps_text));
  const auto xs = sample_points(ExactRational::parse(from_text), ExactRational::parse(to_text),
                                ExactRational::parse(step_text));

  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& x : xs) rows.emplace_back(x.to_string(), evaluate(*fn, x, eps).to_string());

  ordered_json meta;
  meta["function"] = name(*fn);
  meta["epsilon"] = eps.value().to_string();
  write_columns(out, fmt, "x", std::string(name(*fn)), rows, " ", meta);
  return kExitOk;
}

double parse_double(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a finite number: '" + text + "'");
  }
}

int cmd_fourier(std::ostream& out, const std::string& fn_text, long terms, const std::string& from_text,
                const std::string& to_text, const std::string& step_text, double eps, const std::string& format) {
  using Series = std::function<double(double, const FourierConfig&)>;
  Series series;
  if (fn_text == "sawtooth") {
    series = sawtooth_fourier;
  } else if (fn_text == "floor") {
    series = floor_fourier;
  } else if (fn_text == "delta") {
    series = delta_fourier;
  } else {
    throw UsageError("unknown series '" + fn_text + "' (expected sawtooth, floor or delta)");
  }
  const OutputFormat fmt = format_from(format);
  const FourierConfig cfg(terms, eps);
  const double from = parse_double(from_text, "--from");
  const double to = parse_double(to_text, "--to");
  const double step = parse_double(step_text, "--step");
  if (!(step > 0)) throw UsageError("--step must be positive");
  if (to < from) throw UsageError("--from must not exceed --to");

  // Points from + i*step, with a relative slack so the endpoint survives rounding.
  const double count = std::floor((to - from) / step * (1 + 1e-12) + 1e-9) + 1;
  if (count > static_cast<double>(kMaxSamples)) {
    throw UsageError("more than " + std::to_string(kMaxSamples) + " samples");
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (long i = 0; i < static_cast<long>(count); ++i) {
    const double x = from + step * static_cast<double>(i);
    rows.emplace_back(decimal(x), decimal(series(x, cfg)));
  }

  ordered_json meta;
  meta["series"] = fn_text;
  meta["terms"] = terms;
  meta["epsilon"] = eps;
  if (fmt == OutputFormat::Json) {
    meta["rows"] = ordered_json::array();
    for (const auto& [x, v] : rows) meta["rows"].push_back({{"x", std::stod(x)}, {"value", std::stod(v)}});
    out << meta.dump(2) << '\n';
    return kExitOk;
  }
  write_columns(out, fmt, "x", fn_text, rows, " ", meta);
  return kExitOk;
}

int cmd_patterns(std::ostream& out, const std::string& eps_text, const std::string& format) {
  const OutputFormat fmt = format_from(format);
  const Epsilon eps(ExactRational::parse(eps_text));
  const auto table = oracle::ff_pattern_table(eps);

  std::size_t width = 0;
  for (const auto& row : table) width = std::max(width, name(row.function).size());

  switch (fmt) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
      const char sep = separator(fmt);
      out << "function" << sep << "negative" << sep << "zero" << sep << "positive" << '\n';
      for (const auto& row : table) {
        out << name(row.function) << sep << to_string(row.pattern.at_negative) << sep
            << to_string(row.pattern.at_zero) << sep << to_string(row.pattern.at_positive) << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["epsilon"] = eps.value().to_string();
      doc["rows"] = ordered_json::array();
      for (const auto& row : table) {
        doc["rows"].push_back({{"function", name(row.function)},
                               {"negative", to_string(row.pattern.at_negative)},
                               {"zero", to_string(row.pattern.at_zero)},
                               {"positive", to_string(row.pattern.at_positive)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty:
      for (const auto& row : table) {
        std::string label(name(row.function));
        label.resize(width, ' ');
        out << label << "  " << to_string(row.pattern.at_negative) << ' ' << to_string(row.pattern.at_zero) << ' '
            << to_string(row.pattern.at_positive) << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_binary_table(std::ostream& out, const std::string& eps_text, const std::string& format) {
  const OutputFormat fmt = format_from(format);
  const Epsilon eps(ExactRational::parse(eps_text));
  const auto table = oracle::ff_binary_table(eps);

  switch (fmt) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
      const char sep = separator(fmt);
      out << "expression" << sep << "bits" << sep << "decimal" << '\n';
      for (const auto& row : table) out << row.expression << sep << row.bits << sep << row.decimal << '\n';
      break;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["rows"] = ordered_json::array();
      for (const auto& row : table) {
        doc["rows"].push_back({{"expression", row.expression}, {"bits", row.bits}, {"decimal", row.decimal}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty:
      for (const auto& row : table) out << row.expression << ' ' << row.bits << ' ' << row.decimal << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) noexcept {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "json") return OutputFormat::Json;
  if (text == "pretty") return OutputFormat::Pretty;
  return std::nullopt;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roman factorial and foundational-function calculator (exact arithmetic)", "romanff"};
  app.require_subcommand(1);

  std::string n_text, def = "piecewise", from, to, step, format = "pretty", fn, eps = "1/2";
  long terms = 0;
  double fourier_eps = FourierConfig::kDefaultEpsilon;

  auto* eval = app.add_subcommand("eval", "Evaluate the Roman factorial of an integer");
  eval->add_option("n", n_text, "Integer argument")->required();
  eval->add_option("--def", def, "Definition kind")->capture_default_str();

  auto* table = app.add_subcommand("table", "Tabulate the Roman factorial over an integer range");
  table->add_option("--from", from, "First integer")->required();
  table->add_option("--to", to, "Last integer")->required();
  table->add_option("--def", def, "Definition kind")->capture_default_str();
  table->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Compare every definition against the closed form");
  verify->add_option("--from", from, "First integer")->required();
  verify->add_option("--to", to, "Last integer")->required();
  verify->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  auto* ff = app.add_subcommand("ff", "Sample a foundational function on an exact grid");
  ff->add_option("--fn", fn, "Function identifier")->required();
  ff->add_option("--from", from, "First sample (rational)")->required();
  ff->add_option("--to", to, "Last sample bound (rational)")->required();
  ff->add_option("--step", step, "Grid step (rational)")->required();
  ff->add_option("--eps", eps, "Delta offset in (0, 1)")->capture_default_str();
  ff->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  auto* fourier = app.add_subcommand("fourier", "Sample a truncated Fourier approximation");
  fourier->add_option("--fn", fn, "sawtooth, floor or delta")->required();
  fourier->add_option("--terms", terms, "Number of series terms")->required();
  fourier->add_option("--from", from, "First sample")->required();
  fourier->add_option("--to", to, "Last sample bound")->required();
  fourier->add_option("--step", step, "Grid step")->required();
  fourier->add_option("--eps", fourier_eps, "Delta offset in (1/2, 1)")->capture_default_str();
  fourier->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  auto* patterns = app.add_subcommand("patterns", "Print the output pattern of each foundational function");
  patterns->add_option("--eps", eps, "Delta offset in (0, 1)")->capture_default_str();
  patterns->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  auto* binary = app.add_subcommand("binary-table", "Print the three-bit output table");
  binary->add_option("--eps", eps, "Delta offset in (0, 1)")->capture_default_str();
  binary->add_option("--format", format, "csv, tsv, json or pretty")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(out, n_text, def);
    if (table->parsed()) return cmd_table(out, from, to, def, format);
    if (verify->parsed()) return cmd_verify(out, from, to, format);
    if (ff->parsed()) return cmd_ff(out, fn, from, to, step, eps, format);
    if (fourier->parsed()) return cmd_fourier(out, fn, terms, from, to, step, fourier_eps, format);
    if (patterns->parsed()) return cmd_patterns(out, eps, format);
    if (binary->parsed()) return cmd_binary_table(out, eps, format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace romanff::cli
