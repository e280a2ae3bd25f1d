#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "simcheck/check/report.hpp"
#include "simcheck/check/strategy.hpp"
#include "simcheck/error.hpp"
#include "support/testkit.hpp"

using namespace simcheck;
using namespace simcheck::check;

namespace {

StateSummary summary(bool fail, bool free_, bool unchecked, std::size_t pending, std::size_t lo, std::size_t hi) {
  StateSummary s;
  s.lo = lo;
  s.hi = hi;
  s.can_step_fail = fail;
  s.can_step_free = free_;
  s.unchecked_fails = unchecked;
  s.pending_fails = pending;
  return s;
}

sat::SolverStats with_clauses(std::uint64_t n) {
  sat::SolverStats st;
  st.num_active_clauses = n;
  return st;
}

class AlwaysFree : public Strategy {
 public:
  OpKind next_op(const sat::SolverStats&, const StateSummary&) override { return OpKind::StepFree; }
  std::string name() const override { return "always_free"; }
};

}  // namespace

TEST(DefaultStrategy, Rules) {
  StrategyConfig c;
  c.clause_high_water = 100;
  c.window_min = 2;
  DefaultStrategy s(c);
  EXPECT_EQ(s.next_op(with_clauses(10), summary(true, true, true, 1, 3, 4)), OpKind::CheckFails);
  // Window of one frame is below window_min.
  EXPECT_EQ(s.next_op(with_clauses(10), summary(true, true, true, 1, 4, 4)), OpKind::StepFail);
  EXPECT_EQ(s.next_op(with_clauses(500), summary(true, true, false, 0, 3, 6)), OpKind::StepFree);
  EXPECT_EQ(s.next_op(with_clauses(500), summary(true, false, false, 2, 7, 6)), OpKind::CheckFails);
  EXPECT_EQ(s.next_op(with_clauses(10), summary(false, true, false, 1, 3, 6)), OpKind::CheckFails);
  EXPECT_EQ(s.next_op(with_clauses(10), summary(false, true, false, 0, 3, 6)), OpKind::Done);
}

TEST(Registry, BuiltinsAndErrors) {
  auto names = strategy_names();
  for (const char* n : {"default", "periodic", "random"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  try {
    make_strategy("nope", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownStrategy);
  }
  register_strategy("always_free", [](const StrategyConfig&) { return std::make_unique<AlwaysFree>(); });
  EXPECT_EQ(make_strategy("always_free", {})->name(), "always_free");
}

TEST(MainLoop, ImpossibleRequestsRaiseStrategyViolation) {
  auto d = testkit::toy_design();
  CheckState s(d, default_tagging(d->netlist), testkit::toy_run());
  AlwaysFree st;
  try {
    run_main_loop(s, st);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StrategyViolation);
  }
}

TEST(MainLoop, EveryBuiltinTerminatesOnToy) {
  auto d = testkit::toy_design();
  for (const auto& name : {"default", "periodic", "random"}) {
    EngineOptions o;
    o.continue_after_fail = true;
    CheckState s(d, default_tagging(d->netlist), testkit::toy_run(), o);
    auto st = make_strategy(name, {});
    Report r = run_main_loop(s, *st);
    EXPECT_EQ(r.verdict, Verdict::FailsFound) << name;
    if (std::string(name) != "random") {
      EXPECT_EQ(r.frames, 118u) << name;
    }
  }
}

TEST(MainLoop, ArbiterHasNoFailInScope) {
  auto d = testkit::arbiter_design();
  auto w = vcd::parse_vcd_text(testkit::slurp(testkit::source_path("designs/arbiter/arbiter.vcd")));
  CheckState s(d, default_tagging(d->netlist), vcd::sample_at_clock(w, "clk"));
  DefaultStrategy st;
  Report r = run_main_loop(s, st);
  EXPECT_EQ(r.verdict, Verdict::NoneInScope);
  EXPECT_EQ(r.sat_checks, 0u);
}

TEST(Report, SummaryLineAndJson) {
  auto d = testkit::toy_design();
  CheckState s(d, default_tagging(d->netlist), testkit::toy_run());
  DefaultStrategy st;
  Report r = run_main_loop(s, st);
  EXPECT_EQ(summary_line(r).rfind("verdict=fails_found frames=4 checks=1 conflicts=", 0), 0u) << summary_line(r);
  nlohmann::json j = to_json(r, *d);
  EXPECT_EQ(j["verdict"], "fails_found");
  ASSERT_EQ(j["counterexamples"].size(), 1u);
  EXPECT_EQ(j["counterexamples"][0]["fail"], "fail_out");
}
