#include "simcheck/aig/aig.hpp"

#include <utility>

#include "simcheck/error.hpp"

namespace simcheck::aig {

Aig::Aig() { nodes_.push_back(Node{NodeKind::ConstFalse, {}, {}, 0}); }

AigLit Aig::add_input(PortInfo info) {
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::Input, {}, {}, static_cast<std::uint32_t>(inputs_.size())});
  AigLit lit(id, false);
  named_[info.name] = lit;
  inputs_.push_back(std::move(info));
  input_nodes_.push_back(id);
  return lit;
}

AigLit Aig::add_register(PortInfo info) {
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::Reg, {}, {}, static_cast<std::uint32_t>(regs_.size())});
  AigLit lit(id, false);
  named_[info.name] = lit;
  regs_.push_back(Register{lit, kFalse, std::move(info)});
  return lit;
}

void Aig::set_next(std::size_t reg, AigLit next) { regs_.at(reg).next = next; }

void Aig::add_output(std::string name, AigLit lit) { outputs_.push_back(Output{std::move(name), lit}); }

const AigLit* Aig::find(const std::string& name) const {
  auto it = named_.find(name);
  return it == named_.end() ? nullptr : &it->second;
}

AigLit Aig::lookup_or_add(NodeKind kind, AigLit a, AigLit b) {
  if (b < a) std::swap(a, b);
  Key key{kind, a.raw(), b.raw()};
  auto it = strash_.find(key);
  if (it != strash_.end()) return AigLit(it->second, false);
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{kind, a, b, 0});
  strash_.emplace(key, id);
  return AigLit(id, false);
}

AigLit Aig::mk_and(AigLit a, AigLit b) {
  if (a == kFalse || b == kFalse) return kFalse;
  if (a == kTrue) return b;
  if (b == kTrue) return a;
  if (a == b) return a;
  if (a == !b) return kFalse;
  return lookup_or_add(NodeKind::And, a, b);
}

AigLit Aig::mk_xor(AigLit a, AigLit b) {
  if (a == kFalse) return b;
  if (b == kFalse) return a;
  if (a == kTrue) return !b;
  if (b == kTrue) return !a;
  if (a == b) return kFalse;
  if (a == !b) return kTrue;
  // Stored node has positive fanins; the output edge carries the parity.
  bool flip = a.negated() != b.negated();
  return lookup_or_add(NodeKind::Xor, a.positive(), b.positive()) ^ flip;
}

AigLit Aig::mk_mux(AigLit sel, AigLit then_l, AigLit else_l) {
  return mk_or(mk_and(sel, then_l), mk_and(!sel, else_l));
}

FrameValues eval_frame(const Aig& g, std::span<const std::uint8_t> inputs, std::span<const std::uint8_t> state) {
  if (inputs.size() != g.inputs().size())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(g.inputs().size()) + " input values, got " +
                                               std::to_string(inputs.size()));
  if (state.size() != g.registers().size())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(g.registers().size()) +
                                               " register values, got " + std::to_string(state.size()));
  FrameValues fv;
  fv.node.resize(g.num_nodes(), 0);
  auto val = [&](AigLit l) -> std::uint8_t { return fv.node[l.node()] ^ static_cast<std::uint8_t>(l.negated()); };
  for (std::uint32_t id = 0; id < g.num_nodes(); ++id) {
    const Node& n = g.node(id);
    switch (n.kind) {
      case NodeKind::ConstFalse: fv.node[id] = 0; break;
      case NodeKind::Input: fv.node[id] = inputs[n.index] ? 1 : 0; break;
      case NodeKind::Reg: fv.node[id] = state[n.index] ? 1 : 0; break;
      case NodeKind::And: fv.node[id] = val(n.a) & val(n.b); break;
      case NodeKind::Xor: fv.node[id] = val(n.a) ^ val(n.b); break;
    }
  }
  fv.next_state.reserve(g.registers().size());
  for (const auto& r : g.registers()) fv.next_state.push_back(val(r.next));
  return fv;
}

}  // namespace simcheck::aig
