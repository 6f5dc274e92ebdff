#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace posmaps::cli {

enum class Subcommand { classify, spectrum, decompose, spa, witness };

std::string to_string(Subcommand s);

struct RunConfig {
  Subcommand subcommand = Subcommand::classify;
  std::string map_path;
  int samples = 2000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: stdout
  bool decompose = false;  // spa
  bool certify = false;    // witness
  std::optional<std::string> state_path;  // witness
};

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,        // unreadable file, malformed JSON, invalid parameters
  kPrecondition = 2,      // operation not applicable to this map
  kInternalError = 3,     // a constructed certificate failed its own check
};

/// Runs one subcommand and writes the JSON report. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& err);

/// Report text without writing it anywhere; throws posmaps::Error subclasses.
std::string render_report(const RunConfig& config);

/// Name of the report field holding the wall-clock timestamp.
inline constexpr const char* kTimestampField = "generated_at";

}  // namespace posmaps::cli
