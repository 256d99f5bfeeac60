#pragma once

// Command-line front end: JSON run configuration, table writers and the
// radius / simulate / verify / sweep subcommands.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "wellblock/wellblock.hpp"

namespace wellblock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;

/// Malformed configuration; key() is the dotted path of the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

enum class Format { Csv, Json };

std::string to_string(Format f);
Format format_from_string(const std::string& s);

struct LadderLevel {
  double delta = 1.0;
  std::size_t blocks = 1;
  double tau = 1.0;
};

struct VerifySection {
  std::vector<LadderLevel> ladder;
  double t_end = 0.0;
  fd::TimeScheme scheme = fd::TimeScheme::Implicit;
};

struct SweepSection {
  harness::SweepParameter parameter = harness::SweepParameter::Exterior;
  std::vector<double> values;
  bool fit_limit = false;
};

struct SimulateSection {
  double t_end = 1.0;
  std::size_t sample_every = 1;
  fd::TimeScheme scheme = fd::TimeScheme::Implicit;
  bool dump_fields = false;
};

struct OutputSection {
  Format format = Format::Csv;
  std::string path;  // empty: standard output
};

struct RunConfig {
  Regime regime = Regime::SteadyState;
  ProblemInputs inputs;
  SolverOptions solver;
  double rate = 1.0;
  double exterior_pressure = 0.0;
  std::optional<double> r0_override;
  std::optional<VerifySection> verify;
  std::optional<SweepSection> sweep;
  std::optional<SimulateSection> simulate;
  OutputSection output;
};

/// Throws ConfigError naming the offending key; unknown keys are rejected.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& c);

using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// RFC-4180 CSV with a header row, LF line endings, doubles at 17 significant digits.
std::string write_csv(const Table& t);
/// Array of records, one object per row.
nlohmann::json to_json_records(const Table& t);

Table radius_table(const RunConfig& c);
Table simulate_table(const RunConfig& c);
/// Second element: true when every level passed.
std::pair<Table, bool> verify_table(const RunConfig& c);
Table sweep_table(const RunConfig& c);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wellblock::cli
