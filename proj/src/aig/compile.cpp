#include "simcheck/aig/compile.hpp"

#include <optional>

namespace simcheck::aig {

using verilog::GateOp;

namespace {

PortInfo port_info(const verilog::Netlist& n, verilog::BitId b) {
  const auto& bit = n.bits[b];
  const auto* sig = n.find_signal(bit.base);
  return PortInfo{bit.name, bit.base, sig ? bit.index - sig->lsb : 0};
}

}  // namespace

Aig compile(const verilog::Netlist& n) {
  Aig g;
  g.clock = n.clock;
  g.reset = n.reset;

  std::vector<std::optional<AigLit>> bit_lit(n.bits.size());
  for (verilog::BitId b : n.inputs)
    if (n.is_clock_bit(b)) bit_lit[b] = kFalse;
  for (verilog::BitId b : n.data_inputs()) bit_lit[b] = g.add_input(port_info(n, b));
  for (const auto& f : n.flops) bit_lit[f.q] = g.add_register(port_info(n, f.q));

  std::vector<std::optional<AigLit>> gate_lit(n.gates.size());
  auto lit_of = [&](verilog::GateId root) {
    // Post-order over the gate DAG without recursion.
    std::vector<std::pair<verilog::GateId, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (gate_lit[id]) continue;
      const auto& gate = n.gates[id];
      if (!expanded) {
        stack.emplace_back(id, true);
        switch (gate.op) {
          case GateOp::Not: stack.emplace_back(gate.a, false); break;
          case GateOp::And:
          case GateOp::Or:
          case GateOp::Xor:
            stack.emplace_back(gate.a, false);
            stack.emplace_back(gate.b, false);
            break;
          case GateOp::Mux:
            stack.emplace_back(gate.a, false);
            stack.emplace_back(gate.b, false);
            stack.emplace_back(gate.c, false);
            break;
          default: break;
        }
        continue;
      }
      AigLit out = kFalse;
      switch (gate.op) {
        case GateOp::Const0: out = kFalse; break;
        case GateOp::Const1: out = kTrue; break;
        case GateOp::Bit: out = bit_lit[gate.a].value(); break;
        case GateOp::Not: out = !*gate_lit[gate.a]; break;
        case GateOp::And: out = g.mk_and(*gate_lit[gate.a], *gate_lit[gate.b]); break;
        case GateOp::Or: out = g.mk_or(*gate_lit[gate.a], *gate_lit[gate.b]); break;
        case GateOp::Xor: out = g.mk_xor(*gate_lit[gate.a], *gate_lit[gate.b]); break;
        case GateOp::Mux: out = g.mk_mux(*gate_lit[gate.a], *gate_lit[gate.b], *gate_lit[gate.c]); break;
      }
      gate_lit[id] = out;
    }
    return *gate_lit[root];
  };

  for (const auto& c : n.combs) bit_lit[c.bit] = lit_of(c.expr);
  for (std::size_t i = 0; i < n.flops.size(); ++i) g.set_next(i, lit_of(n.flops[i].next));

  for (verilog::BitId b = 0; b < n.bits.size(); ++b)
    if (bit_lit[b]) g.set_name(n.bits[b].name, *bit_lit[b]);
  for (verilog::BitId b : n.outputs) g.add_output(n.bits[b].name, bit_lit[b].value_or(kFalse));
  return g;
}

}  // namespace simcheck::aig
