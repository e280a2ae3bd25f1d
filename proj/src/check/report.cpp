#include "simcheck/check/report.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

#include "simcheck/error.hpp"

namespace simcheck::check {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FailsFound: return "fails_found";
    case Verdict::NoneInScope: return "none_in_scope";
    case Verdict::Incomplete: return "incomplete";
  }
  return "?";
}

Report run_main_loop(CheckState& state, Strategy& strategy) {
  Report rep;
  rep.strategy = strategy.name();
  rep.start = state.start();
  int rejected = 0;
  bool stop = false;
  std::chrono::steady_clock::duration busy{};

  while (!stop) {
    StateSummary s = summarize(state, rep.checks);
    OpKind op = strategy.next_op(state.stats(), s);
    if (op == OpKind::Done) break;
    bool possible = (op == OpKind::StepFail && s.can_step_fail) || (op == OpKind::StepFree && s.can_step_free) ||
                    (op == OpKind::CheckFails && s.pending_fails > 0);
    if (!possible) {
      if (++rejected >= 2)
        throw Error(ErrorCode::StrategyViolation,
                    "strategy '" + rep.strategy + "' asked for impossible " + std::string(to_string(op)) + " twice");
      continue;
    }
    rejected = 0;
    auto t0 = std::chrono::steady_clock::now();
    switch (op) {
      case OpKind::StepFail:
        state.step_fail();
        ++rep.frames;
        break;
      case OpKind::StepFree: state.step_free(); break;
      case OpKind::CheckFails: {
        CheckResult r = state.check_fails();
        ++rep.checks;
        if (r.verdict == CheckVerdict::FailsFound) {
          ++rep.sat_checks;
          for (auto& t : r.traces) rep.traces.push_back(std::move(t));
          stop = !state.options().continue_after_fail;
        } else if (r.verdict == CheckVerdict::NoneInScope) {
          ++rep.unsat_checks;
        }
        break;
      }
      case OpKind::Done: break;
    }
    busy += std::chrono::steady_clock::now() - t0;
  }

  rep.op_seconds = std::chrono::duration<double>(busy).count();
  rep.history = state.history();
  rep.warnings = state.warnings();
  rep.final_stats = state.stats();
  bool open = false;
  for (const auto& f : state.fails())
    if (f.status == FailStatus::Pending || f.status == FailStatus::Inconclusive) open = true;
  if (!rep.traces.empty())
    rep.verdict = Verdict::FailsFound;
  else if (open)
    rep.verdict = Verdict::Incomplete;
  else
    rep.verdict = Verdict::NoneInScope;
  return rep;
}

std::string summary_line(const Report& r) {
  return "verdict=" + std::string(to_string(r.verdict)) + " frames=" + std::to_string(r.frames) +
         " checks=" + std::to_string(r.checks) + " conflicts=" + std::to_string(r.final_stats.num_conflicts_total);
}

namespace {

nlohmann::json stats_json(const sat::SolverStats& s) {
  return {{"vars", s.num_vars},
          {"active_clauses", s.num_active_clauses},
          {"root_units", s.num_root_units},
          {"learned", s.num_learned},
          {"conflicts", s.num_conflicts_total},
          {"solve_calls", s.num_solve_calls}};
}

}  // namespace

nlohmann::json to_json(const Report& r, const Design& d) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["strategy"] = r.strategy;
  j["start_cycle"] = r.start;
  j["frames"] = r.frames;
  j["checks"] = r.checks;
  j["sat_checks"] = r.sat_checks;
  j["unsat_checks"] = r.unsat_checks;
  j["solver"] = stats_json(r.final_stats);
  j["warnings"] = r.warnings;
  auto& hist = j["history"] = nlohmann::json::array();
  for (const auto& op : r.history)
    hist.push_back({{"op", to_string(op.op)},
                    {"lo", op.lo},
                    {"hi", op.hi},
                    {"clauses_added", op.clauses_added},
                    {"active_before", op.before.num_active_clauses},
                    {"active_after", op.after.num_active_clauses},
                    {"conflicts_after", op.after.num_conflicts_total},
                    {"outcome", op.outcome}});
  auto& traces = j["counterexamples"] = nlohmann::json::array();
  for (const auto& t : r.traces) {
    nlohmann::json free = nlohmann::json::object();
    for (std::size_t frame = t.free_from; frame <= t.fail_frame; ++frame) {
      std::string bits;
      for (std::size_t i : t.free_inputs) bits += t.inputs[frame - t.start][i] ? '1' : '0';
      free[std::to_string(frame)] = bits;
    }
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t i : t.free_inputs) names.push_back(t.input_names[i]);
    traces.push_back({{"fail", t.fail_name},
                      {"frame", t.fail_frame},
                      {"free_from", t.free_from},
                      {"free_inputs", names},
                      {"free_values", free}});
  }
  j["design"] = {{"inputs", d.aig.inputs().size()},
                 {"registers", d.aig.registers().size()},
                 {"gates", d.aig.num_gates()}};
  return j;
}

}  // namespace simcheck::check
