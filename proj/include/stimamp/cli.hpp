#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace stimamp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConsistencyFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Parses an angle in radians: a decimal literal ("0.3927") or a rational
/// multiple of pi ("pi", "-pi/4", "3pi/8", "3*pi/8"). Throws
/// std::invalid_argument on anything else.
double parse_angle_literal(std::string_view text);

/// Parses a comma-separated list of decimals ("1.5,2,5").
std::vector<double> parse_number_list(std::string_view text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Documents go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stimamp::cli
