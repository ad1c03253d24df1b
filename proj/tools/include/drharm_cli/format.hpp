#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace drharm::cli {

/// Shortest representation that reads back to the same double; "nan",
/// "inf" and "-inf" for non-finite values.
std::string format_number(double x);

/// Parses "1.5", "-2", "i", "2i", "1+0.5i", "3-i".
std::complex<double> parse_complex(std::string_view text);

double parse_real(std::string_view text);

/// Expands "a:b:step" into a, a + step, ..., <= b; other tokens are single
/// values.
std::vector<double> expand_grid(const std::vector<std::string>& tokens);

}  // namespace drharm::cli
