#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simcheck/check/engine.hpp"
#include "simcheck/sat/solver.hpp"

namespace simcheck::check {

/// What a strategy sees of the engine between operations.
struct StateSummary {
  std::size_t start = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t frames_encoded = 0;
  std::size_t num_cycles = 0;
  bool can_step_fail = false;
  bool can_step_free = false;
  bool unchecked_fails = false;  // fails encoded since the last check
  std::size_t pending_fails = 0;
  std::size_t checks = 0;
};

StateSummary summarize(const CheckState& s, std::size_t checks);

/// Chooses the next main-loop operation. The loop enforces its own caps, so a
/// strategy cannot make a run diverge; one that asks for an impossible
/// operation twice in a row stops the run with Error(StrategyViolation).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual OpKind next_op(const sat::SolverStats& stats, const StateSummary& s) = 0;
  virtual std::string name() const = 0;
};

struct StrategyConfig {
  std::uint64_t clause_high_water = 500000;
  std::size_t window_min = 1;
  std::size_t check_every = 5;  // periodic strategy
  std::uint64_t seed = 0;       // random strategy
};

/// Check as soon as a new fail is encoded and the window is wide enough;
/// shrink the window when the clause database is over the high-water mark;
/// otherwise extend it.
class DefaultStrategy final : public Strategy {
 public:
  explicit DefaultStrategy(StrategyConfig cfg = {}) : cfg_(cfg) {}
  OpKind next_op(const sat::SolverStats& stats, const StateSummary& s) override;
  std::string name() const override { return "default"; }

 private:
  StrategyConfig cfg_;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>(const StrategyConfig&)>;

/// Registers a named strategy; a later registration under the same name
/// replaces the earlier one. "default", "periodic" and "random" are built in.
void register_strategy(const std::string& name, StrategyFactory factory);
/// Throws Error(UnknownStrategy).
std::unique_ptr<Strategy> make_strategy(const std::string& name, const StrategyConfig& cfg);
std::vector<std::string> strategy_names();

}  // namespace simcheck::check
