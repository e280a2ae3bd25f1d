#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simcheck/check/report.hpp"
#include "simcheck/error.hpp"
#include "simcheck/check/tagging.hpp"

namespace simcheck::cli {

struct RunConfig {
  std::vector<std::string> verilog;
  std::string top;
  std::string vcd;
  std::string tags;  // empty: default tagging only
  std::uint64_t seed = 0;
  std::size_t max_frames = SIZE_MAX;
  std::uint64_t max_conflicts = 0;
  std::uint64_t clause_high_water = 500000;
  std::size_t window_min = 1;
  std::string strategy = "default";
  bool continue_after_fail = false;
  std::string cex_out = "cex.vcd";
  std::string report;
  std::string emit_aiger;
  std::string emit_dimacs;
  bool prep_only = false;
};

struct TagLine {
  std::string name;
  check::SignalTag tag;
  int line = 0;
};

/// Parses `name = wave|rand|free|fail` lines; `#` starts a comment. Throws
/// Error(BadTag) with the line number for malformed lines or unknown tags.
std::vector<TagLine> parse_tag_config(std::string_view text);

/// default_tagging with the config lines applied on top. Throws
/// Error(UnknownSignal) or Error(BadTag).
check::Tagging tagging_from_config(const verilog::Netlist& n, const std::vector<TagLine>& lines, std::uint64_t seed);

enum ExitCode : int {
  kNoneInScope = 0,
  kFailsFound = 1,
  kUsageError = 2,
  kInternalError = 3,
  kIncomplete = 4,
};

int exit_code(check::Verdict v);
/// Exit code for an error raised by the library.
int exit_code(ErrorCode c);

/// Whole command-line program. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simcheck::cli
