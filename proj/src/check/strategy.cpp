#include "simcheck/check/strategy.hpp"

#include <map>
#include <mutex>
#include <random>

#include "simcheck/error.hpp"

namespace simcheck::check {

StateSummary summarize(const CheckState& s, std::size_t checks) {
  StateSummary out;
  out.start = s.start();
  out.lo = s.lo();
  out.hi = s.hi();
  out.frames_encoded = s.frames_encoded();
  out.num_cycles = s.num_cycles();
  out.can_step_fail = s.can_step_fail();
  out.can_step_free = s.can_step_free();
  out.unchecked_fails = s.unchecked_fails();
  out.pending_fails = s.num_pending();
  out.checks = checks;
  return out;
}

OpKind DefaultStrategy::next_op(const sat::SolverStats& stats, const StateSummary& s) {
  const std::size_t window = s.can_step_free ? s.hi - s.lo + 1 : 0;
  if (s.unchecked_fails && s.pending_fails > 0 && window >= cfg_.window_min) return OpKind::CheckFails;
  if (stats.num_active_clauses > cfg_.clause_high_water) {
    if (s.can_step_free) return OpKind::StepFree;
    if (s.pending_fails > 0) return OpKind::CheckFails;
  }
  if (s.can_step_fail) return OpKind::StepFail;
  if (s.pending_fails > 0) return OpKind::CheckFails;
  return OpKind::Done;
}

namespace {

// Extends the window one frame at a time and checks every `check_every`
// frames, never binding free inputs.
class PeriodicStrategy final : public Strategy {
 public:
  explicit PeriodicStrategy(StrategyConfig cfg) : every_(cfg.check_every ? cfg.check_every : 1) {}

  OpKind next_op(const sat::SolverStats&, const StateSummary& s) override {
    if (s.pending_fails > 0 && (s.frames_encoded % every_ == 0 || !s.can_step_fail)) return OpKind::CheckFails;
    if (s.can_step_fail) return OpKind::StepFail;
    return OpKind::Done;
  }
  std::string name() const override { return "periodic"; }

 private:
  std::size_t every_;
};

// Picks uniformly among the currently possible operations. Used to show that
// operation order does not affect verdicts.
class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(StrategyConfig cfg) : rng_(cfg.seed) {}

  OpKind next_op(const sat::SolverStats&, const StateSummary& s) override {
    std::vector<OpKind> ops;
    if (s.can_step_fail) ops.push_back(OpKind::StepFail);
    if (s.can_step_free) ops.push_back(OpKind::StepFree);
    if (s.pending_fails > 0) ops.push_back(OpKind::CheckFails);
    if (ops.empty()) return OpKind::Done;
    return ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng_)];
  }
  std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

struct Registry {
  std::mutex mu;
  std::map<std::string, StrategyFactory> factories;

  Registry() {
    factories["default"] = [](const StrategyConfig& c) { return std::make_unique<DefaultStrategy>(c); };
    factories["periodic"] = [](const StrategyConfig& c) { return std::make_unique<PeriodicStrategy>(c); };
    factories["random"] = [](const StrategyConfig& c) { return std::make_unique<RandomStrategy>(c); };
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

void register_strategy(const std::string& name, StrategyFactory factory) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  r.factories[name] = std::move(factory);
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, const StrategyConfig& cfg) {
  auto& r = registry();
  StrategyFactory f;
  {
    std::lock_guard lock(r.mu);
    auto it = r.factories.find(name);
    if (it == r.factories.end()) throw Error(ErrorCode::UnknownStrategy, "unknown strategy '" + name + "'");
    f = it->second;
  }
  return f(cfg);
}

std::vector<std::string> strategy_names() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::vector<std::string> out;
  for (const auto& [name, f] : r.factories) out.push_back(name);
  return out;
}

}  // namespace simcheck::check
