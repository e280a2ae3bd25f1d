#include "simcheck/sim/sim.hpp"

#include <algorithm>

#include "simcheck/error.hpp"

namespace simcheck::sim {

using verilog::GateOp;
using verilog::Netlist;

namespace {

class Evaluator {
 public:
  Evaluator(const Netlist& n, std::vector<std::uint8_t>& bits) : n_(n), bits_(bits), memo_(n.gates.size(), 2) {}

  std::uint8_t eval(verilog::GateId id) {
    if (memo_[id] != 2) return memo_[id];
    const auto& g = n_.gates[id];
    std::uint8_t v = 0;
    switch (g.op) {
      case GateOp::Const0: v = 0; break;
      case GateOp::Const1: v = 1; break;
      case GateOp::Bit: v = bits_[g.a]; break;
      case GateOp::Not: v = eval(g.a) ^ 1; break;
      case GateOp::And: v = eval(g.a) & eval(g.b); break;
      case GateOp::Or: v = eval(g.a) | eval(g.b); break;
      case GateOp::Xor: v = eval(g.a) ^ eval(g.b); break;
      case GateOp::Mux: v = eval(g.a) ? eval(g.b) : eval(g.c); break;
    }
    return memo_[id] = v;
  }

 private:
  const Netlist& n_;
  std::vector<std::uint8_t>& bits_;
  std::vector<std::uint8_t> memo_;
};

}  // namespace

CycleResult simulate_cycle(const Netlist& n, const SimState& s, std::span<const std::uint8_t> inputs) {
  const auto data = n.data_inputs();
  if (inputs.size() != data.size())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(data.size()) + " input values, got " +
                                               std::to_string(inputs.size()));
  if (s.flops.size() != n.flops.size())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(n.flops.size()) + " flop values, got " +
                                               std::to_string(s.flops.size()));
  CycleResult r;
  r.values.assign(n.bits.size(), 0);
  for (std::size_t i = 0; i < data.size(); ++i) r.values[data[i]] = inputs[i] ? 1 : 0;
  for (std::size_t i = 0; i < n.flops.size(); ++i) r.values[n.flops[i].q] = s.flops[i] ? 1 : 0;
  Evaluator ev(n, r.values);
  for (const auto& c : n.combs) r.values[c.bit] = ev.eval(c.expr);
  r.next.cycle = s.cycle + 1;
  for (const auto& f : n.flops) r.next.flops.push_back(ev.eval(f.next));
  return r;
}

std::vector<std::vector<std::uint8_t>> replay(const Netlist& n, const SimState& init,
                                              const std::vector<std::vector<std::uint8_t>>& inputs) {
  std::vector<std::vector<std::uint8_t>> out;
  SimState s = init;
  for (const auto& in : inputs) {
    CycleResult r = simulate_cycle(n, s, in);
    out.push_back(std::move(r.values));
    s = std::move(r.next);
  }
  return out;
}

bool bit_value(const Netlist& n, std::span<const std::uint8_t> values, const std::string& name) {
  auto b = n.find_bit(name);
  if (!b) throw Error(ErrorCode::UnknownSignal, "unknown bit '" + name + "'");
  return values[*b] != 0;
}

WindowResult brute_force_window_check(const Netlist& n, const SimState& init, const check::Tagging& t,
                                      const vcd::SampledRun& run, std::size_t lo, std::size_t hi,
                                      std::span<const FailPoint> fails, bool count_all) {
  check::Stimulus stim(n, t, run);
  const auto& free = stim.free_inputs();
  const std::size_t start = init.cycle;
  const std::size_t width = lo <= hi ? hi - lo + 1 : 0;
  const std::size_t num_bits = width * free.size();
  if (num_bits > static_cast<std::size_t>(kMaxOracleFreeBits))
    throw Error(ErrorCode::TooManyFreeBits, std::to_string(num_bits) + " free bits exceed the oracle limit of " +
                                                std::to_string(kMaxOracleFreeBits));

  std::size_t last = start;
  std::vector<verilog::BitId> fail_bits;
  for (const auto& f : fails) {
    auto b = n.find_bit(f.name);
    if (!b) throw Error(ErrorCode::UnknownSignal, "unknown fail signal '" + f.name + "'");
    fail_bits.push_back(*b);
    last = std::max(last, f.frame);
  }

  auto inputs_at = [&](std::size_t frame, std::uint64_t assignment) {
    std::vector<std::uint8_t> in(stim.num_inputs(), 0);
    for (std::size_t i = 0; i < stim.num_inputs(); ++i)
      if (stim.tag(i) != check::SignalTag::Free) in[i] = stim.fixed_value(i, frame);
    for (std::size_t k = 0; k < free.size(); ++k) {
      std::size_t i = free[k];
      if (frame < lo)
        in[i] = stim.bound_value(i, frame);
      else if (frame <= hi)
        in[i] = static_cast<std::uint8_t>((assignment >> ((frame - lo) * free.size() + k)) & 1u);
    }
    return in;
  };

  // Returns the first fail point raised at a frame in [from, to].
  auto run_frames = [&](SimState& s, std::size_t from, std::size_t to, std::uint64_t assignment) -> const FailPoint* {
    for (std::size_t frame = from; frame <= to; ++frame) {
      CycleResult r = simulate_cycle(n, s, inputs_at(frame, assignment));
      for (std::size_t k = 0; k < fails.size(); ++k)
        if (fails[k].frame == frame && r.values[fail_bits[k]]) return &fails[k];
      s = std::move(r.next);
    }
    return nullptr;
  };

  WindowResult result;
  auto record = [&](const FailPoint& f, std::uint64_t assignment) {
    ++result.failing;
    if (result.some_fail) return;
    result.some_fail = true;
    result.failed = f;
    result.assignment.assign(width, std::vector<std::uint8_t>(free.size(), 0));
    for (std::size_t d = 0; d < width; ++d)
      for (std::size_t k = 0; k < free.size(); ++k)
        result.assignment[d][k] = static_cast<std::uint8_t>((assignment >> (d * free.size() + k)) & 1u);
  };

  // Frames before lo do not depend on the assignment.
  SimState prefix = init;
  const std::size_t split = std::max(lo, start);
  if (split > start) {
    if (const FailPoint* f = run_frames(prefix, start, std::min(split - 1, last), 0)) {
      result.assignments = 1;
      record(*f, 0);
      result.failing = count_all ? (std::uint64_t{1} << num_bits) : 1;
      return result;
    }
  }
  if (split > last) {
    result.assignments = 1;
    return result;
  }
  const std::uint64_t total = std::uint64_t{1} << num_bits;
  for (std::uint64_t a = 0; a < total; ++a) {
    ++result.assignments;
    SimState s = prefix;
    if (const FailPoint* f = run_frames(s, split, last, a)) {
      record(*f, a);
      if (!count_all) break;
    }
  }
  return result;
}

}  // namespace simcheck::sim
