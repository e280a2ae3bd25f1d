#include <gtest/gtest.h>

#include <random>

#include "simcheck/check/engine.hpp"
#include "simcheck/check/report.hpp"
#include "simcheck/error.hpp"
#include "simcheck/sim/sim.hpp"
#include "support/testkit.hpp"

using namespace simcheck;
using namespace simcheck::check;

namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IoError;
}

struct Toy {
  std::shared_ptr<const Design> design = testkit::toy_design();
  vcd::SampledRun run = testkit::toy_run();
  Tagging tagging = default_tagging(design->netlist);
};

vcd::SampledSignal& signal(vcd::SampledRun& r, const std::string& name) { return r.signals[*r.find(name)]; }

}  // namespace

TEST(Engine, InitAnchorsOnResetDeassertion) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  EXPECT_EQ(s.start(), 2u);
  EXPECT_EQ(s.lo(), 2u);
  EXPECT_EQ(s.frames_encoded(), 0u);
  EXPECT_TRUE(s.can_step_fail());
  EXPECT_FALSE(s.can_step_free());
  EXPECT_EQ(s.initial_state().size(), 8u);
}

TEST(Engine, InitErrors) {
  Toy toy;
  auto stuck = toy.run;
  for (auto& v : signal(stuck, "reset").values) v = "1";
  EXPECT_EQ(error_of([&] { CheckState s(toy.design, toy.tagging, stuck); }), ErrorCode::ResetNeverDeasserts);

  auto missing = toy.run;
  missing.signals.erase(missing.signals.begin() + static_cast<std::ptrdiff_t>(*missing.find("wave_op")));
  EXPECT_EQ(error_of([&] { CheckState s(toy.design, toy.tagging, missing); }), ErrorCode::MissingWaveSignal);

  auto bogus = toy.tagging;
  bogus.fail_signals.push_back("fail_nope");
  EXPECT_EQ(error_of([&] { CheckState s(toy.design, bogus, toy.run); }), ErrorCode::UnknownSignal);
}

TEST(Engine, OperationPreconditions) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  EXPECT_EQ(error_of([&] { s.step_free(); }), ErrorCode::NothingToBind);
  EXPECT_EQ(error_of([&] { s.check_fails(); }), ErrorCode::NoMonitoredFails);
  EngineOptions o;
  o.max_frames = 2;
  CheckState capped(toy.design, toy.tagging, toy.run, o);
  capped.step_fail();
  capped.step_fail();
  EXPECT_FALSE(capped.can_step_fail());
  EXPECT_EQ(error_of([&] { capped.step_fail(); }), ErrorCode::BudgetExhausted);
}

TEST(Engine, EarlyToyFramesFoldToConstants) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 3; ++k) s.step_fail();  // frames 2..4 only see anchored registers
  for (const auto& f : s.fails()) EXPECT_EQ(f.status, FailStatus::TriviallyFalse);
  EXPECT_FALSE(s.unchecked_fails());
  s.step_fail();
  EXPECT_EQ(s.fails().back().status, FailStatus::Pending);
  EXPECT_GT(s.history().back().after.num_active_clauses, s.history().back().before.num_active_clauses);
}

TEST(Engine, ToyFirstFailNeedsElevenAtFrameTwo) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 4; ++k) s.step_fail();
  CheckResult r = s.check_fails();
  ASSERT_EQ(r.verdict, CheckVerdict::FailsFound);
  ASSERT_EQ(r.traces.size(), 1u);
  const CexTrace& t = r.traces[0];
  EXPECT_EQ(t.fail_frame, 5u);
  EXPECT_EQ(t.free_values(2), (std::vector<std::uint8_t>{1, 1}));
  EXPECT_TRUE(s.replays(t));
  EXPECT_EQ(s.fails().back().status, FailStatus::Found);
}

TEST(Engine, BindingEverythingLeavesNoFreedom) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 6; ++k) s.step_fail();
  while (s.can_step_free()) s.step_free();
  // free_in is dumped as 0, so with every frame bound no fail can rise.
  CheckResult r = s.check_fails();
  EXPECT_EQ(r.verdict, CheckVerdict::NoneInScope);
  for (const auto& f : s.fails()) EXPECT_NE(f.status, FailStatus::Pending);
}

TEST(Engine, CorruptedFrameMapIsCaughtByReplay) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 4; ++k) s.step_fail();
  s.corrupt_frame_map_for_testing();
  EXPECT_EQ(error_of([&] { s.check_fails(); }), ErrorCode::ReplayMismatch);
}

TEST(Engine, StepFreeNeverGrowsActiveClauses) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 12; ++k) s.step_fail();
  for (int k = 0; k < 8; ++k) {
    auto before = s.stats().num_active_clauses;
    s.step_free();
    EXPECT_LE(s.stats().num_active_clauses, before);
  }
}

TEST(Engine, MaxFramesZeroIsImmediatelyDone) {
  Toy toy;
  EngineOptions o;
  o.max_frames = 0;
  CheckState s(toy.design, toy.tagging, toy.run, o);
  DefaultStrategy st;
  Report rep = run_main_loop(s, st);
  EXPECT_TRUE(rep.history.empty());
  EXPECT_EQ(rep.frames, 0u);
}

TEST(Engine, RunsAreDeterministic) {
  auto once = [] {
    Toy toy;
    EngineOptions o;
    o.continue_after_fail = true;
    CheckState s(toy.design, toy.tagging, toy.run, o);
    StrategyConfig c;
    c.clause_high_water = 60;
    DefaultStrategy st(c);
    return run_main_loop(s, st);
  };
  Report a = once(), b = once();
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t k = 0; k < a.history.size(); ++k) {
    EXPECT_EQ(a.history[k].op, b.history[k].op);
    EXPECT_EQ(a.history[k].after, b.history[k].after);
  }
  ASSERT_EQ(a.traces.size(), b.traces.size());
  for (std::size_t k = 0; k < a.traces.size(); ++k) EXPECT_EQ(a.traces[k].inputs, b.traces[k].inputs);
}

TEST(Engine, ContinueFindsFurtherFails) {
  Toy toy;
  EngineOptions o;
  o.continue_after_fail = true;
  o.max_frames = 20;
  CheckState s(toy.design, toy.tagging, toy.run, o);
  DefaultStrategy st;
  Report rep = run_main_loop(s, st);
  EXPECT_EQ(rep.verdict, Verdict::FailsFound);
  EXPECT_GT(rep.traces.size(), 1u);
  for (const auto& t : rep.traces) EXPECT_TRUE(s.replays(t));
}

TEST(Engine, RandInputsComeFromTheSeed) {
  Toy toy;
  auto t = toy.tagging;
  apply_override(t, toy.design->netlist, "wave_op", SignalTag::Rand);
  t.rand_seed = 42;
  CheckState s(toy.design, t, toy.run);
  for (std::size_t f = 0; f < 10; ++f) {
    std::size_t op = 1;  // reset, wave_op, free_in[0], free_in[1]
    EXPECT_EQ(s.stimulus().fixed_value(op, f), rand_bit(42, "wave_op", f, kRandSalt));
  }
}

TEST(Engine, ConflictBudgetGivesIncomplete) {
  // Pigeonhole-like difficulty is not needed: a one-conflict budget on a
  // window wide enough to need search is enough to stop some check early.
  std::mt19937_64 rng(1);
  bool saw_unknown = false;
  for (int i = 0; i < 30 && !saw_unknown; ++i) {
    auto d = build_design(testkit::random_design(rng, 16, 2).source, "rtop");
    auto run = testkit::random_run(d->netlist, rng, 30, 1);
    EngineOptions o;
    o.max_conflicts = 1;
    o.continue_after_fail = true;
    CheckState s(d, default_tagging(d->netlist), run, o);
    DefaultStrategy st;
    Report rep = run_main_loop(s, st);
    for (const auto& f : s.fails()) saw_unknown = saw_unknown || f.status == FailStatus::Inconclusive;
    if (saw_unknown) {
      EXPECT_NE(rep.verdict, Verdict::NoneInScope);
    }
  }
  EXPECT_TRUE(saw_unknown);
}

TEST(Engine, TraceToRunReplaysFromVcd) {
  Toy toy;
  CheckState s(toy.design, toy.tagging, toy.run);
  for (int k = 0; k < 4; ++k) s.step_fail();
  CexTrace t = s.check_fails().traces.at(0);
  vcd::SampledRun cex = trace_to_run(*toy.design, t, toy.run);
  EXPECT_EQ(cex.num_cycles(), t.fail_frame - t.start + 1);
  auto fail = cex.find("fail_out");
  ASSERT_TRUE(fail);
  EXPECT_EQ(cex.signals[*fail].values.back(), "1");
}
