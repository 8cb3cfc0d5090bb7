#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lincomb::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kPrecondition = 2, kIndeterminate = 3, kUsage = 64 };

/// Everything that determines a run's output. Embedded in every output file.
struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 0;
  std::string output;  ///< empty: standard output
  std::string format;  ///< "csv" or "json"
  unsigned precision = 128;
  std::map<std::string, std::string> flags;
};

/// Default precision: LINCOMB_PRECISION if set and valid, else 128 bits.
unsigned default_precision();

/// Parse args (without the program name) and run the subcommand. Results go
/// to the output file or `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lincomb::cli
