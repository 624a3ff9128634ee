#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "unimod/measure.hpp"
#include "unimod/report.hpp"
#include "unimod/series.hpp"

namespace unimod {

/// Invalid configuration; the command line maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int N = 4;
  std::string family = "geometric";  // geometric | explicit | custom
  double s = 2.0;
  std::string rule;  // custom family: "constant:<v>" or "spliced"
  std::map<TriangularIndex, double> explicit_weights;
  int window = 6;
  std::uint64_t seed = 42;
  int samples = 100000;
  int points = 1000;
  double tol_pointwise = 1e-9;
  double tol_stat = 3.0;  // multiples of the standard error
  double threshold = 1e9;
  int max_terms = 200;
  int symbolic_cap = 6;
  std::string out;  // report path; empty writes to stdout
  std::string format = "text";  // text | structured
};

/// Parses a key = value file and applies it on top of cfg. Config values
/// override flag values (and flags override defaults).
void apply_config_file(RunConfig& cfg, const std::string& path);

void validate_common(const RunConfig& cfg);
MeasureParams make_measure(const RunConfig& cfg);
SeriesOptions series_options(const RunConfig& cfg);

Report cmd_verify_symbolic(const RunConfig& cfg);
Report cmd_classify(const RunConfig& cfg);
Report cmd_check_representation(const RunConfig& cfg);
/// Full run: symbolic verification, series classification, representation
/// checks, and the resolved-convention flags, in one report.
Report cmd_report(const RunConfig& cfg);

}  // namespace unimod
