#include <gtest/gtest.h>

#include "simcheck/check/tagging.hpp"
#include "simcheck/error.hpp"
#include "simcheck/sim/sim.hpp"
#include "support/testkit.hpp"

using namespace simcheck;
using namespace simcheck::sim;

namespace {

const char* kCounter = R"(
module cnt (input clk, input reset, input free_en, output fail_wrap);
  reg [1:0] c;
  always @(posedge clk) c <= reset ? 2'b00 : (free_en ? {c[1] ^ c[0], ~c[0]} : c);
  assign fail_wrap = &c;
endmodule
)";

}  // namespace

TEST(Sim, CounterCounts) {
  auto d = check::build_design(kCounter, "cnt");
  const auto& n = d->netlist;
  // inputs: reset, free_en
  std::vector<std::vector<std::uint8_t>> in = {{1, 0}, {0, 1}, {0, 1}, {0, 0}, {0, 1}, {0, 1}};
  auto values = replay(n, SimState{{1, 1}, 0}, in);
  ASSERT_EQ(values.size(), in.size());
  std::vector<bool> wrap;
  for (const auto& v : values) wrap.push_back(bit_value(n, v, "fail_wrap"));
  // c: 3, 0, 1, 2, 2, 3
  EXPECT_EQ(wrap, (std::vector<bool>{true, false, false, false, false, true}));
}

TEST(Sim, LengthMismatch) {
  auto d = check::build_design(kCounter, "cnt");
  std::vector<std::uint8_t> in = {0};
  EXPECT_THROW(simulate_cycle(d->netlist, SimState{{0, 0}, 0}, in), Error);
  EXPECT_THROW(bit_value(d->netlist, std::vector<std::uint8_t>(d->netlist.bits.size()), "nope"), Error);
}

TEST(Oracle, CounterNeedsThreeEnables) {
  auto d = check::build_design(kCounter, "cnt");
  vcd::SampledRun run;
  run.clock_name = "clk";
  for (int k = 0; k < 6; ++k) run.cycle_times.push_back(10 * k + 5);
  run.signals.push_back({"reset", 1, {"1", "0", "0", "0", "0", "0"}});
  auto t = check::default_tagging(d->netlist);
  SimState init{{0, 0}, 1};
  std::vector<FailPoint> at3 = {{"fail_wrap", 3}};
  std::vector<FailPoint> at4 = {{"fail_wrap", 4}};
  EXPECT_FALSE(brute_force_window_check(d->netlist, init, t, run, 1, 3, at3).some_fail);
  auto r = brute_force_window_check(d->netlist, init, t, run, 1, 4, at4, true);
  EXPECT_TRUE(r.some_fail);
  EXPECT_EQ(r.assignments, 16u);
  EXPECT_EQ(r.failing, 2u);  // the frame-4 enable does not matter
  EXPECT_EQ(r.assignment, (std::vector<std::vector<std::uint8_t>>{{1}, {1}, {1}, {0}}));
}

TEST(Oracle, BoundFramesUseWaveformValues) {
  auto d = check::build_design(kCounter, "cnt");
  vcd::SampledRun run;
  run.clock_name = "clk";
  for (int k = 0; k < 6; ++k) run.cycle_times.push_back(10 * k + 5);
  run.signals.push_back({"reset", 1, {"1", "0", "0", "0", "0", "0"}});
  run.signals.push_back({"free_en", 1, {"0", "1", "1", "0", "0", "0"}});
  auto t = check::default_tagging(d->netlist);
  std::vector<FailPoint> at4 = {{"fail_wrap", 4}};
  // Frames 1 and 2 are bound to 1, so only frame 3 remains free.
  auto r = brute_force_window_check(d->netlist, SimState{{0, 0}, 1}, t, run, 3, 4, at4, true);
  EXPECT_TRUE(r.some_fail);
  EXPECT_EQ(r.failing, 2u);
}

TEST(Oracle, TooManyFreeBits) {
  auto d = check::build_design(kCounter, "cnt");
  vcd::SampledRun run;
  run.clock_name = "clk";
  for (int k = 0; k < 40; ++k) run.cycle_times.push_back(10 * k + 5);
  run.signals.push_back({"reset", 1, std::vector<vcd::Value>(40, "0")});
  std::vector<FailPoint> f = {{"fail_wrap", 30}};
  try {
    brute_force_window_check(d->netlist, SimState{{0, 0}, 0}, check::default_tagging(d->netlist), run, 0, 30, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyFreeBits);
  }
}

TEST(Tagging, DefaultPrefixRule) {
  auto d = testkit::toy_design();
  auto t = check::default_tagging(d->netlist);
  EXPECT_EQ(t.tag_of("free_in"), check::SignalTag::Free);
  EXPECT_EQ(t.tag_of("wave_op"), check::SignalTag::Wave);
  EXPECT_EQ(t.tag_of("reset"), check::SignalTag::Wave);
  EXPECT_EQ(t.input_tags.count("clk"), 0u);
  EXPECT_EQ(t.fail_signals, (std::vector<std::string>{"fail_out"}));
}

TEST(Tagging, OverrideErrors) {
  auto d = testkit::toy_design();
  auto t = check::default_tagging(d->netlist);
  auto code = [&](const std::string& name, check::SignalTag tag) {
    try {
      check::apply_override(t, d->netlist, name, tag);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code("nope", check::SignalTag::Free), ErrorCode::UnknownSignal);
  EXPECT_EQ(code("des.tmp", check::SignalTag::Free), ErrorCode::BadTag);
  EXPECT_EQ(code("free_in", check::SignalTag::Fail), ErrorCode::BadTag);
  EXPECT_EQ(code("clk", check::SignalTag::Wave), ErrorCode::BadTag);
  EXPECT_EQ(code("reset", check::SignalTag::Free), ErrorCode::BadTag);
  check::apply_override(t, d->netlist, "wave_op", check::SignalTag::Rand);
  EXPECT_EQ(t.tag_of("wave_op"), check::SignalTag::Rand);
  check::apply_override(t, d->netlist, "op", check::SignalTag::Fail);
  EXPECT_EQ(t.fail_signals.size(), 2u);
}

TEST(Tagging, RandIsPureAndSeeded) {
  int diff = 0;
  for (std::size_t f = 0; f < 64; ++f) {
    EXPECT_EQ(check::rand_bit(1, "a", f, 0), check::rand_bit(1, "a", f, 0));
    diff += check::rand_bit(1, "a", f, 0) != check::rand_bit(2, "a", f, 0);
  }
  EXPECT_GT(diff, 10);
}

TEST(Tagging, NoFailSignals) {
  auto d = check::build_design("module m (input clk, input a, output reg y); always @(posedge clk) y <= a; endmodule",
                               "m");
  EXPECT_THROW(check::default_tagging(d->netlist), Error);
}
