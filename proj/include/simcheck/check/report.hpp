#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "simcheck/check/engine.hpp"
#include "simcheck/check/strategy.hpp"

namespace simcheck::check {

enum class Verdict { FailsFound, NoneInScope, Incomplete };
std::string_view to_string(Verdict v);

struct Report {
  Verdict verdict = Verdict::NoneInScope;
  std::string strategy;
  std::size_t start = 0;
  std::size_t frames = 0;  // step_fail operations
  std::size_t checks = 0;  // check_fails operations
  std::size_t sat_checks = 0;
  std::size_t unsat_checks = 0;
  std::vector<OpRecord> history;
  std::vector<CexTrace> traces;
  std::vector<std::string> warnings;
  sat::SolverStats final_stats;
  double op_seconds = 0;  // time spent inside engine operations
};

/// Runs the strategy's operations until it says Done, a fail is found (unless
/// the engine continues after fails), or no operation can make progress.
/// Asking for an impossible operation twice in a row throws
/// Error(StrategyViolation); a single impossible request is skipped.
Report run_main_loop(CheckState& state, Strategy& strategy);

/// `verdict=<...> frames=<n> checks=<n> conflicts=<n>`
std::string summary_line(const Report& r);
nlohmann::json to_json(const Report& r, const Design& d);

}  // namespace simcheck::check
