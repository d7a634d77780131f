#pragma once

#include <string>
#include <vector>

namespace schurpress {

/// Parses one θ specification: a single value, a comma list, or an
/// inclusive range "start:stop:step" (endpoints matched within 1e-9).
/// Values are in degrees, as everywhere on the command line.
std::vector<double> parse_theta_spec(const std::string& spec);

/// Report path companion of a data path: foo.csv -> foo_report.csv.
std::string report_path_for(const std::string& out_path);

/// Runs one experiment subcommand. Exit codes: 0 success, 2 invalid input,
/// 1 failed verification row (--check) or I/O failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace schurpress
