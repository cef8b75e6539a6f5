#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "thurston/io.hpp"

namespace thurston::cli {

enum class Command { Orbifold, Matrix, Slopes, Table, Canonical };

const char* to_string(Command c);
Command command_from_string(const std::string& name);

struct Options {
  Rational width{1, 1000000};        // leading-eigenvalue interval width
  std::int64_t bound = 8;            // slope search box
  std::size_t subset_cap = default_subset_cap;
  bool check_simple = false;         // matrix: only the simple-obstruction check
  std::optional<Slope> orbit_start;  // slopes: also iterate this slope
  std::size_t orbit_steps = 10;
  Multicurve multicurve;             // table: overrides the document's multicurve
};

/// One analysis: a command, exactly one input document, and options.
struct AnalysisRequest {
  Command command = Command::Matrix;
  io::json input;
  Options options;
};

struct Outcome {
  int exit_code = 0;  // 0 ok, 2 malformed input, 3 precondition, 4 resource cap
  io::json report;
};

io::json to_json(const AnalysisRequest& request);
AnalysisRequest request_from_json(const io::json& value);

/// Throws InputError for options outside their documented ranges.
void validate(const Options& options);

/// Runs the analysis. Never throws for mathematical or input problems: they
/// are reported in the document and mapped to the exit code.
Outcome run(const AnalysisRequest& request);

struct ReplayResult {
  bool identical = false;
  Outcome rerun;
};

/// Re-runs the request embedded in a report and compares byte for byte.
ReplayResult replay(const io::json& report);

/// Serialised report, as written by the tool.
std::string dump(const io::json& report);

/// Human-readable rendering of a report.
std::string render_text(const io::json& report);

}  // namespace thurston::cli
