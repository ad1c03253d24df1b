#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace drharm::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kDomain = 2;
inline constexpr int kQuadrature = 3;
inline constexpr int kNumerical = 4;
inline constexpr int kInadmissible = 10;
inline constexpr int kUnknown = 11;
}  // namespace exit_code

/// Runs the command line `args` (without the program name), writing results
/// to `out` and error JSON to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestResult {
  std::string report;
  bool passed = false;
};

/// The invariant suite behind `drharm selftest`. The report is a function of
/// the seed only.
SelftestResult run_selftest(std::uint64_t seed);

}  // namespace drharm::cli
