#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simcheck/aig/aig.hpp"
#include "simcheck/check/tagging.hpp"
#include "simcheck/sat/solver.hpp"
#include "simcheck/vcd/vcd.hpp"
#include "simcheck/verilog/netlist.hpp"

namespace simcheck::check {

/// Elaborated netlist plus its compiled AIG. Immutable once built.
struct Design {
  verilog::Netlist netlist;
  aig::Aig aig;
};

/// Builds a Design from Verilog source text. Throws the frontend's errors.
std::shared_ptr<const Design> build_design(std::string_view source, const std::string& top);

enum class FailStatus {
  Pending,         // encoded, not yet covered by a check
  TriviallyFalse,  // folded to constant 0
  Discharged,      // a check proved it cannot be raised
  Found,           // a counterexample was extracted
  Inconclusive,    // its check ran out of solver budget
};

struct MonitoredFail {
  std::string name;
  std::size_t frame = 0;
  std::int64_t enc = 0;  // see CheckState::kConstFalse and friends
  FailStatus status = FailStatus::Pending;
};

/// A concrete run from the anchored start state that raises `fail_name` at
/// `fail_frame`. `inputs[k]` holds every data input (Netlist::data_inputs()
/// order) at frame start + k.
struct CexTrace {
  std::string fail_name;
  std::size_t fail_frame = 0;
  std::size_t start = 0;
  std::size_t free_from = 0;  // window lo when the trace was extracted
  std::vector<std::uint8_t> initial_state;
  std::vector<std::string> input_names;
  std::vector<std::size_t> free_inputs;
  std::vector<std::vector<std::uint8_t>> inputs;

  /// Free input values at `frame`, in free_inputs order.
  std::vector<std::uint8_t> free_values(std::size_t frame) const;
};

enum class OpKind { StepFail, StepFree, CheckFails, Done };
std::string_view to_string(OpKind op);

enum class CheckVerdict { FailsFound, NoneInScope, Unknown };
std::string_view to_string(CheckVerdict v);

struct CheckResult {
  CheckVerdict verdict = CheckVerdict::NoneInScope;
  std::vector<CexTrace> traces;
  bool solver_called = false;
};

struct OpRecord {
  OpKind op = OpKind::Done;
  std::size_t lo = 0;  // window after the op
  std::size_t hi = 0;
  std::uint64_t clauses_added = 0;
  sat::SolverStats before;
  sat::SolverStats after;
  std::string outcome;
};

struct EngineOptions {
  sat::CdclOptions solver;
  std::size_t max_frames = SIZE_MAX;  // cap on step_fail operations
  std::uint64_t max_conflicts = 0;    // total over the run; 0 = unlimited
  bool continue_after_fail = false;   // block found fails and keep going
};

/// Sliding-window state of one run. Frame k is clock cycle k of the anchoring
/// waveform: registers hold their state at cycle k and inputs their cycle-k
/// values. Frames [start, lo) have every free input bound; frames [lo, hi]
/// still have unbound free inputs; fails are encoded for frames
/// [start, hi].
class CheckState {
 public:
  static constexpr std::int64_t kUnset = -1;
  static constexpr std::int64_t kConstFalse = 0;
  static constexpr std::int64_t kConstTrue = 1;
  // Other values are solver literals offset by 2.

  /// init_run. start is the first cycle with reset sampled 0 (cycle 0 when
  /// the design has no reset); registers take their sampled values there.
  /// Throws Error(ResetNeverDeasserts), Error(MissingWaveSignal) or
  /// Error(UnknownSignal) for a fail signal that is not in the design.
  CheckState(std::shared_ptr<const Design> design, Tagging tagging, vcd::SampledRun run, EngineOptions opts = {},
             std::unique_ptr<sat::Solver> solver = nullptr);
  ~CheckState();
  CheckState(const CheckState&) = delete;
  CheckState& operator=(const CheckState&) = delete;

  /// Encodes every fail signal at frame hi + 1. Throws Error(BudgetExhausted)
  /// when the waveform has no cycle hi + 1 or max_frames is reached.
  void step_fail();
  /// Binds every free input at frame lo with a permanent unit clause and
  /// advances lo. Throws Error(NothingToBind) when lo > hi.
  void step_free();
  /// Solves for any pending fail being 1. Throws Error(NoMonitoredFails).
  /// Throws Error(ReplayMismatch) if an extracted trace does not replay.
  CheckResult check_fails();

  std::size_t start() const { return start_; }
  std::size_t lo() const { return lo_; }
  /// Newest encoded frame; start - 1 (wrapping at 0) before any step_fail.
  std::size_t hi() const { return hi_; }
  std::size_t frames_encoded() const { return hi_ + 1 - start_; }
  std::size_t num_cycles() const { return run_.num_cycles(); }
  bool can_step_fail() const { return hi_ + 1 < run_.num_cycles() && frames_encoded() < opts_.max_frames; }
  bool can_step_free() const { return frames_encoded() > 0 && lo_ <= hi_; }
  std::size_t num_pending() const;
  bool unchecked_fails() const { return unchecked_; }

  const Design& design() const { return *design_; }
  const EngineOptions& options() const { return opts_; }
  const Tagging& tagging() const { return tagging_; }
  const vcd::SampledRun& run() const { return run_; }
  const Stimulus& stimulus() const { return *stim_; }
  const std::vector<std::uint8_t>& initial_state() const { return init_; }
  const std::vector<MonitoredFail>& fails() const { return fails_; }
  const std::vector<OpRecord>& history() const { return history_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  sat::Solver& solver() { return *solver_; }
  sat::SolverStats stats() { return solver_->stats(); }

  /// Replays `t` through the netlist simulator and reports whether the fail
  /// is 1 at its frame.
  bool replays(const CexTrace& t) const;

  /// Test hook: trace extraction forgets every free-variable mapping, as if
  /// the frame map had been corrupted. Replay validation must catch it.
  void corrupt_frame_map_for_testing() { corrupt_ = true; }

 private:
  std::int64_t encode(std::uint32_t node, std::size_t frame);
  std::int64_t lit_value(aig::AigLit l, std::size_t frame);
  std::vector<std::int64_t>& frame_row(std::size_t frame);
  void add(std::initializer_list<sat::Lit> lits);
  CexTrace extract(const MonitoredFail& f);
  OpRecord begin(OpKind op);
  void finish(OpRecord& r, std::string outcome);

  std::shared_ptr<const Design> design_;
  Tagging tagging_;
  vcd::SampledRun run_;
  EngineOptions opts_;
  std::unique_ptr<Stimulus> stim_;
  std::unique_ptr<sat::Solver> solver_;
  std::vector<aig::AigLit> fail_lits_;

  std::size_t start_ = 0;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
  std::vector<std::uint8_t> init_;
  std::map<std::size_t, std::vector<std::int64_t>> frames_;
  std::map<std::pair<std::size_t, std::size_t>, sat::Var> free_vars_;  // (frame, input) -> var
  std::vector<MonitoredFail> fails_;
  std::vector<OpRecord> history_;
  std::vector<std::string> warnings_;
  std::uint64_t clauses_added_ = 0;
  bool unchecked_ = false;
  bool corrupt_ = false;
};

/// Converts a trace into a per-cycle run (inputs, registers and every named
/// bit, grouped back into multi-bit signals) for VCD output. Cycle times are
/// taken from `original` so the trace lines up with the input waveform.
vcd::SampledRun trace_to_run(const Design& d, const CexTrace& t, const vcd::SampledRun& original);

}  // namespace simcheck::check
