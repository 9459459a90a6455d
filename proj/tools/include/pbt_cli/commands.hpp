#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pbt::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Bad flags or ranges; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
  std::string to_string() const;
};

/// "7" or "3..9". Throws UsageError.
IntRange parse_range(const std::string& text);

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  IntRange d{2, 2};
  IntRange N{1, 10};
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  std::optional<double> cd;
  bool optimal = false;
  bool appendix_b = false;
  Format format = Format::Csv;
  std::string out;
  int exact_threshold = 60;
  bool quick = false;
  bool rmt = false;
  bool schurweyl = false;
};

/// Guard rails: d in [1, 8], N in [1, 500], lo <= hi. Throws UsageError.
void validate(const RunConfig& config);

using Cell = std::variant<std::monostate, long, double, std::string>;

struct Table {
  std::vector<std::string> metadata;  // written as '# ' lines
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Doubles with 12 significant digits; empty cell for monostate.
void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, Format format);

Table cmd_fidelity(const RunConfig& config);
Table cmd_prob(const RunConfig& config);
Table cmd_bounds(const RunConfig& config);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// With none of quick/rmt/schurweyl set, runs all three groups.
VerifyReport cmd_verify(const RunConfig& config);
void write_verify(std::ostream& os, const VerifyReport& report, Format format);

/// Parses argv and runs; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbt::cli
