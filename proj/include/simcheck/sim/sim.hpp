#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simcheck/check/tagging.hpp"
#include "simcheck/vcd/vcd.hpp"
#include "simcheck/verilog/netlist.hpp"

namespace simcheck::sim {

/// Flop values in Netlist::flops order.
struct SimState {
  std::vector<std::uint8_t> flops;
  std::size_t cycle = 0;
  friend bool operator==(const SimState&, const SimState&) = default;
};

struct CycleResult {
  SimState next;
  std::vector<std::uint8_t> values;  // every netlist bit, by BitId
};

/// Evaluates the combinational logic in topological order from the current
/// flop values and `inputs` (Netlist::data_inputs() order; the clock reads
/// as 0), then updates all flops at once. Throws Error(LengthMismatch).
CycleResult simulate_cycle(const verilog::Netlist& n, const SimState& s, std::span<const std::uint8_t> inputs);

/// Per-cycle bit values for consecutive cycles starting at `init`.
std::vector<std::vector<std::uint8_t>> replay(const verilog::Netlist& n, const SimState& init,
                                              const std::vector<std::vector<std::uint8_t>>& inputs);

/// Value of the bit named `name` in a `values` vector from simulate_cycle.
/// Throws Error(UnknownSignal).
bool bit_value(const verilog::Netlist& n, std::span<const std::uint8_t> values, const std::string& name);

struct FailPoint {
  std::string name;
  std::size_t frame = 0;
  friend bool operator==(const FailPoint&, const FailPoint&) = default;
};

struct WindowResult {
  bool some_fail = false;
  FailPoint failed;                                // first failing point of `assignment`
  std::vector<std::vector<std::uint8_t>> assignment;  // per frame in [lo, hi], per free input
  std::uint64_t assignments = 0;                   // enumerated
  std::uint64_t failing = 0;                       // counted only when count_all is set
};

inline constexpr int kMaxOracleFreeBits = 24;

/// Exhaustive search over every assignment to the Free inputs at frames
/// [lo, hi], starting from `init` at frame init.cycle. Free inputs before lo
/// take their bound values and Wave/Rand inputs their fixed values, exactly
/// as the check engine fixes them. Reports whether any assignment drives a
/// fail point to 1. All fail frames must be <= hi. With `count_all` the
/// search does not stop at the first hit and counts failing assignments.
/// Throws Error(TooManyFreeBits) above kMaxOracleFreeBits.
WindowResult brute_force_window_check(const verilog::Netlist& n, const SimState& init, const check::Tagging& t,
                                      const vcd::SampledRun& run, std::size_t lo, std::size_t hi,
                                      std::span<const FailPoint> fails, bool count_all = false);

}  // namespace simcheck::sim
