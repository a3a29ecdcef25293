#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qhj/eigensolver.hpp"
#include "qhj/potentials.hpp"
#include "qhj/report.hpp"

namespace qhj::cli {

/// Bad flags or inconsistent inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct LevelRange {
  int first = 0;
  int last = 0;
};

/// "3" or "0..4". Throws UsageError on malformed or empty ranges.
LevelRange parse_levels(std::string_view text);

struct RunConfig {
  std::string family = "harmonic";
  std::map<std::string, double> params;
  /// Node count, except for hydrogen where it is the principal number.
  std::optional<LevelRange> n;
  /// Hydrogen radial quantum number.
  std::optional<LevelRange> nr;
  Format format = Format::Csv;
  bool full = false;
  bool with_fields = false;
  std::string output;
  EigenOptions eigen;
  std::size_t field_points = 2001;
  /// "auto", a number, or a CSV file with columns n,R.
  std::string r_source = "auto";
  std::string table;
};

PotentialModel build_model(const RunConfig& config);

/// Node counts selected by the config, ascending.
std::vector<int> selected_nodes(const RunConfig& config, const PotentialModel& model);

/// Multiplies eigenvalue tolerances by QHJ_TOL_OVERRIDE when it is set to a
/// positive number.
void apply_tolerance_override(RunConfig& config);

report::Table cmd_eigen(const RunConfig& config);
report::Table cmd_residual(const RunConfig& config);
report::Table cmd_table(const RunConfig& config);
report::Table cmd_fields(const RunConfig& config);
report::Table cmd_correct(const RunConfig& config);

/// CSV text, or a JSON array of row objects (numeric cells as numbers, empty
/// cells as null).
std::string render(const report::Table& table, Format format);

/// Full command line entry point. Returns the process exit code: 0 success,
/// 2 usage error, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qhj::cli
