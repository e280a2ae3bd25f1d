#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "simcheck/cli/cli.hpp"
#include "simcheck/sim/sim.hpp"
#include "support/testkit.hpp"

using namespace simcheck;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code = 0;
  std::string out;
  std::string err;

  std::string last_line() const {
    auto s = out;
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s.substr(s.rfind('\n') + 1);
  }
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = cli::cli_main(args, o, e);
  return {code, o.str(), e.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("simcheck_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  const std::string toy_v = testkit::source_path("designs/toy/toy.v");
  const std::string toy_vcd = testkit::source_path("designs/toy/toy_op1.vcd");
  const std::string arb_v = testkit::source_path("designs/arbiter/arbiter.v");
  const std::string arb_vcd = testkit::source_path("designs/arbiter/arbiter.vcd");
  fs::path dir_;
};

}  // namespace

TEST(TagConfig, Parses) {
  auto lines = cli::parse_tag_config("# comment\n\nwave_op = rand  # trailing\n  free_in=free\nop = fail\n");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].name, "wave_op");
  EXPECT_EQ(lines[0].tag, check::SignalTag::Rand);
  EXPECT_EQ(lines[1].line, 4);
  EXPECT_EQ(lines[2].tag, check::SignalTag::Fail);
}

TEST(TagConfig, Errors) {
  auto code = [](const std::string& text) {
    try {
      cli::parse_tag_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code("wave_op rand\n"), ErrorCode::BadTag);
  EXPECT_EQ(code("wave_op = sometimes\n"), ErrorCode::BadTag);
  EXPECT_EQ(code(" = wave\n"), ErrorCode::BadTag);
  auto d = testkit::toy_design();
  EXPECT_THROW(cli::tagging_from_config(d->netlist, cli::parse_tag_config("nope = free"), 0), Error);
}

TEST(ExitCodes, TotalOverVerdicts) {
  EXPECT_EQ(cli::exit_code(check::Verdict::NoneInScope), 0);
  EXPECT_EQ(cli::exit_code(check::Verdict::FailsFound), 1);
  EXPECT_EQ(cli::exit_code(check::Verdict::Incomplete), 4);
  EXPECT_EQ(cli::exit_code(ErrorCode::SyntaxError), 2);
  EXPECT_EQ(cli::exit_code(ErrorCode::BadTag), 2);
  EXPECT_EQ(cli::exit_code(ErrorCode::ReplayMismatch), 3);
  EXPECT_EQ(cli::exit_code(ErrorCode::StrategyViolation), 3);
}

TEST_F(Cli, ToyFindsFailAndCexReplays) {
  Out r = run({"--top", "top", toy_v, "--vcd", toy_vcd, "--cex-out", path("cex.vcd"), "--report", path("r.json")});
  ASSERT_EQ(r.code, 1) << r.err;
  EXPECT_EQ(r.last_line().rfind("verdict=fails_found frames=4 checks=1 conflicts=", 0), 0u) << r.out;

  // Replay the written counterexample: registers from its first cycle,
  // every input from the dump.
  auto d = testkit::toy_design();
  const auto& n = d->netlist;
  auto cex = vcd::sample_at_clock(vcd::parse_vcd_text(testkit::slurp(path("cex.vcd"))), "clk");
  std::vector<std::string> warnings;
  sim::SimState init{check::sample_flops(n, cex, 0, warnings), 0};
  EXPECT_TRUE(warnings.empty());
  std::vector<std::vector<std::uint8_t>> inputs;
  for (std::size_t c = 0; c < cex.num_cycles(); ++c) {
    std::vector<std::uint8_t> row;
    for (auto b : n.data_inputs()) row.push_back(check::sampled_bit(n, b, cex, c) == '1');
    inputs.push_back(row);
  }
  auto values = sim::replay(n, init, inputs);
  EXPECT_TRUE(sim::bit_value(n, values.back(), "fail_out"));
  for (std::size_t c = 0; c + 1 < values.size(); ++c) EXPECT_FALSE(sim::bit_value(n, values[c], "fail_out"));
  EXPECT_TRUE(fs::exists(path("r.json")));
}

TEST_F(Cli, ArbiterIsClean) {
  Out r = run({"--top", "arb_top", arb_v, "--vcd", arb_vcd, "--cex-out", path("cex.vcd")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.last_line().rfind("verdict=none_in_scope", 0), 0u);
  EXPECT_FALSE(fs::exists(path("cex.vcd")));
}

TEST_F(Cli, ConflictBudgetGivesIncomplete) {
  Out r = run({"--top", "arb_top", arb_v, "--vcd", arb_vcd, "--max-conflicts", "1"});
  EXPECT_EQ(r.code, 4) << r.out << r.err;
  EXPECT_EQ(r.last_line().rfind("verdict=incomplete", 0), 0u);
}

TEST_F(Cli, UsageErrors) {
  Out r = run({toy_v, "--vcd", toy_vcd});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"--top", "top", toy_v}).code, 2);  // no waveform
  EXPECT_EQ(run({"--top", "top", toy_v, "--vcd", toy_vcd, "--strategy", "nope"}).code, 2);
  EXPECT_EQ(run({"--top", "nope", toy_v, "--vcd", toy_vcd}).code, 2);
  EXPECT_EQ(run({"--top", "top", toy_v, "--vcd", toy_vcd, "--window-min", "0"}).code, 2);
}

TEST_F(Cli, SyntaxErrorPointsAtFileLineColumn) {
  std::string bad = write("bad.v", "module m (input a);\n  assign y = ;\nendmodule\n");
  Out r = run({"--top", "m", bad, "--prep-only"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind(bad + ":2:", 0), 0u) << r.err;
}

TEST_F(Cli, PrepOnlyEmitsAiger) {
  Out r = run({"--top", "top", toy_v, "--prep-only", "--emit-aiger", path("toy.aag")});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("toy.aag"));
  auto a = testkit::read_aag(in);
  EXPECT_EQ(a.ni, 4u);
  EXPECT_EQ(a.nl, 8u);
  EXPECT_EQ(r.out.find("verdict="), std::string::npos);
}

TEST_F(Cli, TagConfigChangesTheRun) {
  // With the op input drawn from the seed, the toy still fails but the run
  // now reports the rand input in its warnings-free output.
  std::string tags = write("tags.cfg", "wave_op = rand\n");
  Out r = run({"--top", "top", toy_v, "--vcd", toy_vcd, "--tags", tags, "--seed", "3", "--cex-out", path("c.vcd")});
  EXPECT_EQ(r.code, 1) << r.err;
  std::string bad = write("bad.cfg", "fail_out = wave\n");
  EXPECT_EQ(run({"--top", "top", toy_v, "--vcd", toy_vcd, "--tags", bad}).code, 2);
  std::string unknown = write("unknown.cfg", "ghost = free\n");
  Out u = run({"--top", "top", toy_v, "--vcd", toy_vcd, "--tags", unknown});
  EXPECT_EQ(u.code, 2);
  EXPECT_NE(u.err.find("ghost"), std::string::npos);
}

TEST_F(Cli, DimacsDump) {
  Out r = run({"--top", "top", toy_v, "--vcd", toy_vcd, "--cex-out", path("c.vcd"), "--emit-dimacs", path("f.cnf")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(testkit::slurp(path("f.cnf")).rfind("p cnf ", 0), 0u);
}
