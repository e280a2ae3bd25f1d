#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace simcheck::aig {

/// Edge into the graph: node index plus an inversion flag, packed as
/// `2 * node + negated`. Node 0 is constant false, so literal 0 is false and
/// literal 1 is true.
class AigLit {
 public:
  constexpr AigLit() = default;
  constexpr AigLit(std::uint32_t node, bool negated) : raw_((node << 1) | (negated ? 1u : 0u)) {}

  static constexpr AigLit from_raw(std::uint32_t raw) {
    AigLit l;
    l.raw_ = raw;
    return l;
  }

  constexpr std::uint32_t node() const { return raw_ >> 1; }
  constexpr bool negated() const { return raw_ & 1u; }
  constexpr std::uint32_t raw() const { return raw_; }
  constexpr bool is_const() const { return node() == 0; }
  constexpr AigLit operator!() const { return from_raw(raw_ ^ 1u); }
  constexpr AigLit positive() const { return from_raw(raw_ & ~1u); }
  constexpr AigLit operator^(bool flip) const { return from_raw(raw_ ^ (flip ? 1u : 0u)); }

  friend constexpr auto operator<=>(AigLit, AigLit) = default;

 private:
  std::uint32_t raw_ = 0;
};

inline constexpr AigLit kFalse = AigLit(0, false);
inline constexpr AigLit kTrue = AigLit(0, true);

enum class NodeKind : std::uint8_t { ConstFalse, Input, Reg, And, Xor };

struct Node {
  NodeKind kind = NodeKind::ConstFalse;
  AigLit a;           // And/Xor fanins, a < b
  AigLit b;
  std::uint32_t index = 0;  // Input / Reg ordinal
};

/// Named 1-bit port of the graph. `base` and `bit` locate the bit inside a
/// multi-bit source signal: `bit` is the 0-based position above the LSB.
struct PortInfo {
  std::string name;
  std::string base;
  int bit = 0;
};

struct Register {
  AigLit state;  // positive literal of the Reg node
  AigLit next;
  PortInfo info;
};

struct Output {
  std::string name;
  AigLit lit;
};

/// Hash-consed and-inverter graph with first-class XOR nodes and registers.
///
/// Nodes are appended only; fanins always precede the node that uses them.
/// mk_and/mk_xor fold constants and trivial operand pairs before looking up
/// the structural hash, so no stored gate has a constant, equal, or
/// complementary fanin pair.
class Aig {
 public:
  Aig();

  AigLit add_input(PortInfo info);
  AigLit add_register(PortInfo info);
  void set_next(std::size_t reg, AigLit next);
  void add_output(std::string name, AigLit lit);
  void set_name(const std::string& name, AigLit lit) { named_[name] = lit; }

  AigLit mk_and(AigLit a, AigLit b);
  AigLit mk_xor(AigLit a, AigLit b);
  static AigLit mk_not(AigLit a) { return !a; }
  AigLit mk_or(AigLit a, AigLit b) { return !mk_and(!a, !b); }
  AigLit mk_mux(AigLit sel, AigLit then_l, AigLit else_l);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_gates() const { return nodes_.size() - 1 - inputs_.size() - regs_.size(); }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  std::span<const Node> nodes() const { return nodes_; }

  std::span<const PortInfo> inputs() const { return inputs_; }
  std::span<const std::uint32_t> input_nodes() const { return input_nodes_; }
  std::span<const Register> registers() const { return regs_; }
  std::span<const Output> outputs() const { return outputs_; }
  const std::unordered_map<std::string, AigLit>& named() const { return named_; }
  /// Literal for a named signal bit, or nullptr.
  const AigLit* find(const std::string& name) const;

  /// Clock and reset names carried over from the netlist; metadata only.
  std::string clock;
  std::string reset;

 private:
  struct Key {
    NodeKind kind;
    std::uint32_t a;
    std::uint32_t b;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = (static_cast<std::uint64_t>(k.a) << 32) ^ k.b ^ (static_cast<std::uint64_t>(k.kind) << 61);
      return std::hash<std::uint64_t>{}(h * 0x9E3779B97F4A7C15ull);
    }
  };

  AigLit lookup_or_add(NodeKind kind, AigLit a, AigLit b);

  std::vector<Node> nodes_;
  std::vector<PortInfo> inputs_;
  std::vector<std::uint32_t> input_nodes_;
  std::vector<Register> regs_;
  std::vector<Output> outputs_;
  std::unordered_map<std::string, AigLit> named_;
  std::unordered_map<Key, std::uint32_t, KeyHash> strash_;
};

/// Two-valued evaluation of one frame.
struct FrameValues {
  std::vector<std::uint8_t> node;        // per node id
  std::vector<std::uint8_t> next_state;  // per register

  bool value(AigLit l) const { return static_cast<bool>(node[l.node()]) != l.negated(); }
};

/// Evaluates every node in one topological pass from the given primary input
/// and register values. Throws Error(LengthMismatch) on wrong vector sizes.
FrameValues eval_frame(const Aig& g, std::span<const std::uint8_t> inputs, std::span<const std::uint8_t> state);

}  // namespace simcheck::aig
