#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace simcheck::verilog {

using BitId = std::uint32_t;
using GateId = std::uint32_t;

enum class SignalRole { Input, Output, Wire, Reg };

/// One 1-bit net. `name` is `base[index]` for ranged signals and `base` for
/// scalars; child-instance signals carry an `inst.` prefix in `base`.
struct NetBit {
  std::string name;
  std::string base;
  int index = 0;
};

struct NetSignal {
  std::string name;
  int width = 1;
  int lsb = 0;
  bool scalar = true;
  SignalRole role = SignalRole::Wire;
  std::vector<BitId> bits;  // LSB first
};

enum class GateOp : std::uint8_t { Const0, Const1, Bit, Not, And, Or, Xor, Mux };

/// Bit-level expression node. Bit: a = BitId. Not: a. And/Or/Xor: a, b.
/// Mux: a = select, b = then, c = else.
struct Gate {
  GateOp op = GateOp::Const0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
};

struct Flop {
  BitId q = 0;
  GateId next = 0;
};

struct Comb {
  BitId bit = 0;
  GateId expr = 0;
};

/// Flat bit-level sequential circuit produced by elaborate().
///
/// Invariants: `combs` is topologically ordered (every Bit gate in a comb's
/// expression refers to an input, a flop output, or a comb earlier in the
/// list); every bit that is not a primary input is defined exactly once.
struct Netlist {
  std::vector<NetBit> bits;
  std::vector<NetSignal> signals;
  std::vector<BitId> inputs;
  std::vector<BitId> outputs;
  std::vector<Flop> flops;
  std::vector<Comb> combs;
  std::vector<Gate> gates;
  std::string clock;
  std::string reset;

  const NetSignal* find_signal(const std::string& name) const;
  std::optional<BitId> find_bit(const std::string& name) const;

  bool is_clock_bit(BitId b) const;
  /// Primary inputs other than the clock, in declaration order. This is the
  /// per-cycle input vector layout shared by the simulator and the AIG.
  std::vector<BitId> data_inputs() const;

  void rebuild_index();

 private:
  std::unordered_map<std::string, std::size_t> signal_index_;
  std::unordered_map<std::string, BitId> bit_index_;
};

}  // namespace simcheck::verilog
