#include "simcheck/verilog/elaborate.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <set>
#include <unordered_set>

namespace simcheck::verilog {

namespace {

int bit_length(std::uint64_t v) { return v == 0 ? 1 : 64 - std::countl_zero(v); }

// Width of an expression whose internal widths have already been validated.
// 0 means unsized (a bare constant, or an operator over bare constants).
int natural_width(const SourceModule& m, const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const: return e.width;
    case ExprKind::Ref: return m.width_of(e.name).value_or(1);
    case ExprKind::BitSelect: return 1;
    case ExprKind::PartSelect: return e.hi - e.lo + 1;
    case ExprKind::Concat: {
      int w = 0;
      for (const auto& a : e.args) w += natural_width(m, a);
      return w;
    }
    case ExprKind::Replicate: return e.count * natural_width(m, e.args[0]);
    case ExprKind::Unary: return e.unary == UnaryOp::BitNot ? natural_width(m, e.args[0]) : 1;
    case ExprKind::Binary:
      if (e.binary == BinaryOp::Eq || e.binary == BinaryOp::Neq) return 1;
      return std::max(natural_width(m, e.args[0]), natural_width(m, e.args[1]));
    case ExprKind::Ternary: return std::max(natural_width(m, e.args[1]), natural_width(m, e.args[2]));
  }
  return 1;
}

// Bits needed to hold an unsized expression's value.
int unsized_width(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const: return bit_length(e.value);
    case ExprKind::Unary: return e.unary == UnaryOp::BitNot ? unsized_width(e.args[0]) : 1;
    case ExprKind::Binary:
      if (e.binary == BinaryOp::Eq || e.binary == BinaryOp::Neq) return 1;
      return std::max(unsized_width(e.args[0]), unsized_width(e.args[1]));
    case ExprKind::Ternary: return std::max(unsized_width(e.args[1]), unsized_width(e.args[2]));
    default: return 1;
  }
}

class WidthChecker {
 public:
  WidthChecker(const SourceModule& m, std::vector<Diagnostic>& out) : m_(m), out_(out) {}

  void run() {
    for (const auto& s : m_.stmts) {
      int lw = width(s.lhs);
      int rw = width(s.rhs);
      if (lw < 0 || rw < 0) continue;
      if (rw == 0) {
        fit(s.rhs, lw);
      } else if (lw != rw) {
        report(s.loc, "assignment of " + std::to_string(rw) + "-bit expression to " +
                          std::to_string(lw) + "-bit target '" + s.lhs.name + "'");
      }
    }
    for (const auto& inst : m_.instances)
      for (const auto& c : inst.connections) width(c.expr);
  }

  // -1: error already reported; 0: unsized; otherwise the width.
  int width(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Const: return e.width;
      case ExprKind::Ref: {
        auto w = m_.width_of(e.name);
        if (!w) return undeclared(e);
        return *w;
      }
      case ExprKind::BitSelect:
      case ExprKind::PartSelect: {
        auto w = m_.width_of(e.name);
        if (!w) return undeclared(e);
        int lsb = m_.lsb_of(e.name);
        if (e.lo < lsb || e.hi > lsb + *w - 1) {
          report(e.loc, "select [" + std::to_string(e.hi) + (e.kind == ExprKind::PartSelect ? ":" + std::to_string(e.lo) : "") +
                            "] out of range for '" + e.name + "'");
          return -1;
        }
        return e.hi - e.lo + 1;
      }
      case ExprKind::Concat: {
        int total = 0;
        bool bad = false;
        for (const auto& a : e.args) {
          int w = width(a);
          if (w == 0) {
            report(a.loc, "unsized constant in concatenation");
            bad = true;
          } else if (w < 0) {
            bad = true;
          }
          total += w;
        }
        return bad ? -1 : total;
      }
      case ExprKind::Replicate: {
        int w = width(e.args[0]);
        if (w == 0) {
          report(e.loc, "unsized constant in replication");
          return -1;
        }
        return w < 0 ? -1 : w * e.count;
      }
      case ExprKind::Unary: {
        int w = width(e.args[0]);
        if (w < 0) return -1;
        return e.unary == UnaryOp::BitNot ? w : 1;
      }
      case ExprKind::Binary: {
        int w = unify(e.args[0], e.args[1], e.loc);
        if (w < 0) return -1;
        return (e.binary == BinaryOp::Eq || e.binary == BinaryOp::Neq) ? 1 : w;
      }
      case ExprKind::Ternary: {
        int cw = width(e.args[0]);
        if (cw > 1) {
          report(e.args[0].loc, "ternary condition is " + std::to_string(cw) + " bits wide, expected 1");
        } else if (cw == 0) {
          fit(e.args[0], 1);
        }
        int w = unify(e.args[1], e.args[2], e.loc);
        return cw < 0 || cw > 1 ? -1 : w;
      }
    }
    return -1;
  }

 private:
  int unify(const Expr& a, const Expr& b, SourceLoc loc) {
    int wa = width(a);
    int wb = width(b);
    if (wa < 0 || wb < 0) return -1;
    if (wa > 0 && wb > 0 && wa != wb) {
      report(loc, "operand widths differ (" + std::to_string(wa) + " vs " + std::to_string(wb) + ")");
      return -1;
    }
    if (wa == 0 && wb > 0) fit(a, wb);
    if (wb == 0 && wa > 0) fit(b, wa);
    return std::max(wa, wb);
  }

  // An unsized expression adopting context width `w` must not lose bits.
  void fit(const Expr& e, int w) {
    if (w >= 64) return;
    if (e.kind == ExprKind::Const && (e.value >> w) != 0) {
      report(e.loc, "constant " + std::to_string(e.value) + " does not fit in " + std::to_string(w) + " bits");
      return;
    }
    if (e.kind == ExprKind::Unary && e.unary == UnaryOp::BitNot) fit(e.args[0], w);
    if (e.kind == ExprKind::Binary && e.binary != BinaryOp::Eq && e.binary != BinaryOp::Neq) {
      fit(e.args[0], w);
      fit(e.args[1], w);
    }
    if (e.kind == ExprKind::Ternary) {
      fit(e.args[1], w);
      fit(e.args[2], w);
    }
  }

  int undeclared(const Expr& e) {
    out_.push_back({Severity::Error, ErrorCode::UnknownSignal, m_.name, e.loc,
                    "'" + e.name + "' is not declared in module '" + m_.name + "'"});
    return -1;
  }

  void report(SourceLoc loc, std::string msg) {
    out_.push_back({Severity::Error, ErrorCode::WidthMismatch, m_.name, loc, std::move(msg)});
  }

  const SourceModule& m_;
  std::vector<Diagnostic>& out_;
};

class Elaborator {
 public:
  explicit Elaborator(std::span<const SourceModule> modules) {
    for (const auto& m : modules) modules_[m.name] = &m;
  }

  Netlist run(const std::string& top) {
    auto it = modules_.find(top);
    if (it == modules_.end()) throw Error(ErrorCode::UnknownModule, "top module '" + top + "' not found");
    gates_.push_back({GateOp::Const0});
    gates_.push_back({GateOp::Const1});
    instantiate(*it->second, "", {}, true);
    finish();
    return std::move(nl_);
  }

 private:
  struct Scope {
    const SourceModule* mod = nullptr;
    std::string prefix;
    std::unordered_map<std::string, std::size_t> signals;  // local name -> netlist signal
    std::unordered_map<std::string, std::string> aliases;   // local port -> resolved parent net
  };

  static constexpr GateId kConst0 = 0;
  static constexpr GateId kConst1 = 1;

  GateId add_gate(GateOp op, std::uint32_t a = 0, std::uint32_t b = 0, std::uint32_t c = 0) {
    gates_.push_back({op, a, b, c});
    return static_cast<GateId>(gates_.size() - 1);
  }

  GateId bit_gate(BitId b) {
    auto it = bit_gates_.find(b);
    if (it != bit_gates_.end()) return it->second;
    GateId g = add_gate(GateOp::Bit, b);
    bit_gates_[b] = g;
    return g;
  }

  std::size_t add_signal(const std::string& name, int width, int lsb, bool scalar, SignalRole role) {
    NetSignal s;
    s.name = name;
    s.width = width;
    s.lsb = lsb;
    s.scalar = scalar;
    s.role = role;
    for (int i = 0; i < width; ++i) {
      NetBit b;
      b.base = name;
      b.index = lsb + i;
      b.name = scalar ? name : name + "[" + std::to_string(lsb + i) + "]";
      s.bits.push_back(static_cast<BitId>(nl_.bits.size()));
      nl_.bits.push_back(std::move(b));
      driver_.push_back(0);
    }
    nl_.signals.push_back(std::move(s));
    return nl_.signals.size() - 1;
  }

  void instantiate(const SourceModule& m, const std::string& prefix,
                   std::unordered_map<std::string, std::string> aliases, bool is_top) {
    if (std::find(stack_.begin(), stack_.end(), m.name) != stack_.end())
      throw Error(ErrorCode::RecursiveInstance, "module '" + m.name + "' instantiates itself", m.loc);
    stack_.push_back(m.name);

    Scope scope;
    scope.mod = &m;
    scope.prefix = prefix;
    scope.aliases = std::move(aliases);
    for (const auto& p : m.ports) {
      SignalRole role = is_top ? (p.dir == PortDir::Input ? SignalRole::Input : SignalRole::Output)
                               : (p.kind == NetKind::Reg ? SignalRole::Reg : SignalRole::Wire);
      std::size_t idx = add_signal(prefix + p.name, p.width(), p.range ? p.range->lsb : 0, !p.range, role);
      scope.signals[p.name] = idx;
      if (is_top) {
        for (BitId b : nl_.signals[idx].bits) {
          if (p.dir == PortDir::Input) {
            nl_.inputs.push_back(b);
            driver_[b] = 3;
          } else {
            nl_.outputs.push_back(b);
          }
        }
      }
    }
    for (const auto& d : m.decls) {
      std::size_t idx = add_signal(prefix + d.name, d.width(), d.range ? d.range->lsb : 0, !d.range,
                                   d.kind == NetKind::Reg ? SignalRole::Reg : SignalRole::Wire);
      scope.signals[d.name] = idx;
    }

    for (const auto& s : m.stmts) {
      std::vector<BitId> targets = lvalue_bits(scope, s.lhs);
      std::vector<GateId> value = blast(scope, s.rhs, static_cast<int>(targets.size()));
      if (s.kind == StmtKind::NonBlockingFF) {
        const PortDecl* p = m.find_port(s.lhs.name);
        const NetDecl* d = m.find_decl(s.lhs.name);
        bool is_reg = (p && p->kind == NetKind::Reg) || (d && d->kind == NetKind::Reg);
        if (!is_reg)
          throw Error(ErrorCode::NotAReg, "nonblocking assignment target '" + s.lhs.name + "' is not a reg", s.loc);
        if (!scope.signals.count(s.clock))
          throw Error(ErrorCode::UnknownSignal, "clock '" + s.clock + "' is not declared", s.loc);
        clocks_.insert(resolve(scope, s.clock));
        for (std::size_t i = 0; i < targets.size(); ++i) {
          drive(targets[i], 2, s.loc);
          nl_.flops.push_back({targets[i], value[i]});
        }
      } else {
        for (std::size_t i = 0; i < targets.size(); ++i) {
          drive(targets[i], 1, s.loc);
          combs_.push_back({targets[i], value[i]});
        }
      }
    }

    for (const auto& inst : m.instances) instantiate_child(scope, inst);
    stack_.pop_back();
  }

  void instantiate_child(Scope& parent, const Instance& inst) {
    auto it = modules_.find(inst.module);
    if (it == modules_.end()) throw Error(ErrorCode::UnknownModule, "unknown module '" + inst.module + "'", inst.loc);
    const SourceModule& child = *it->second;

    // Resolve every child port to a parent expression.
    std::vector<std::pair<const PortDecl*, Expr>> bindings;
    for (const auto& c : inst.connections)
      if (!child.find_port(c.port))
        throw Error(ErrorCode::PortMismatch, "module '" + child.name + "' has no port '" + c.port + "'", c.loc);
    for (const auto& p : child.ports) {
      auto c = std::find_if(inst.connections.begin(), inst.connections.end(),
                            [&](const Connection& x) { return x.port == p.name; });
      if (c != inst.connections.end()) {
        bindings.emplace_back(&p, c->expr);
      } else if (inst.wildcard) {
        auto pw = parent.mod->width_of(p.name);
        if (!pw)
          throw Error(ErrorCode::PortMismatch,
                      "'.*' cannot connect port '" + p.name + "': no such signal in '" + parent.mod->name + "'", inst.loc);
        bindings.emplace_back(&p, Expr::ref(p.name, inst.loc));
      } else {
        throw Error(ErrorCode::PortMismatch, "port '" + p.name + "' of '" + inst.name + "' is unconnected", inst.loc);
      }
    }
    std::unordered_map<std::string, std::string> aliases;
    for (const auto& [port, expr] : bindings) {
      int w = natural_width(*parent.mod, expr);
      if (w != 0 && w != port->width())
        throw Error(ErrorCode::PortMismatch,
                    "port '" + port->name + "' of '" + inst.name + "' is " + std::to_string(port->width()) +
                        " bits, connection is " + std::to_string(w),
                    expr.loc.valid() ? expr.loc : inst.loc);
      if (port->dir == PortDir::Input && expr.kind == ExprKind::Ref)
        aliases[port->name] = resolve(parent, expr.name);
    }

    std::string prefix = parent.prefix + inst.name + ".";
    std::size_t first_signal = nl_.signals.size();
    instantiate(child, prefix, std::move(aliases), false);
    auto child_bits = [&](const std::string& port) -> const std::vector<BitId>& {
      for (std::size_t i = first_signal; i < nl_.signals.size(); ++i)
        if (nl_.signals[i].name == prefix + port) return nl_.signals[i].bits;
      throw Error(ErrorCode::PortMismatch, "internal: port not found");
    };

    for (const auto& [port, expr] : bindings) {
      const auto& bits = child_bits(port->name);
      if (port->dir == PortDir::Input) {
        auto value = blast(parent, expr, port->width());
        for (std::size_t i = 0; i < bits.size(); ++i) {
          drive(bits[i], 1, expr.loc);
          combs_.push_back({bits[i], value[i]});
        }
      } else {
        if (!expr.is_lvalue())
          throw Error(ErrorCode::PortMismatch, "output port '" + port->name + "' must connect to a net", expr.loc);
        auto targets = lvalue_bits(parent, expr);
        for (std::size_t i = 0; i < targets.size(); ++i) {
          drive(targets[i], 1, expr.loc);
          combs_.push_back({targets[i], bit_gate(bits[i])});
        }
      }
    }
  }

  std::string resolve(const Scope& scope, const std::string& local) const {
    auto it = scope.aliases.find(local);
    return it != scope.aliases.end() ? it->second : scope.prefix + local;
  }

  void drive(BitId b, std::uint8_t kind, SourceLoc loc) {
    if (driver_[b] != 0)
      throw Error(ErrorCode::MultipleDrivers, "'" + nl_.bits[b].name + "' has multiple drivers", loc);
    driver_[b] = kind;
  }

  const NetSignal& signal(const Scope& scope, const std::string& local, SourceLoc loc) const {
    auto it = scope.signals.find(local);
    if (it == scope.signals.end())
      throw Error(ErrorCode::UnknownSignal, "'" + local + "' is not declared in '" + scope.mod->name + "'", loc);
    return nl_.signals[it->second];
  }

  std::vector<BitId> lvalue_bits(const Scope& scope, const Expr& e) const {
    const NetSignal& s = signal(scope, e.name, e.loc);
    if (e.kind == ExprKind::Ref) return s.bits;
    std::vector<BitId> out;
    for (int i = e.lo; i <= e.hi; ++i) out.push_back(s.bits.at(static_cast<std::size_t>(i - s.lsb)));
    return out;
  }

  GateId reduce(GateOp op, const std::vector<GateId>& bits) {
    GateId acc = bits[0];
    for (std::size_t i = 1; i < bits.size(); ++i) acc = add_gate(op, acc, bits[i]);
    return acc;
  }

  // Bit-blasts `e` to exactly `w` gates, LSB first.
  std::vector<GateId> blast(const Scope& scope, const Expr& e, int w) {
    const SourceModule& m = *scope.mod;
    std::vector<GateId> out;
    switch (e.kind) {
      case ExprKind::Const:
        for (int i = 0; i < w; ++i) out.push_back(i < 64 && ((e.value >> i) & 1u) ? kConst1 : kConst0);
        return out;
      case ExprKind::Ref:
      case ExprKind::BitSelect:
      case ExprKind::PartSelect:
        for (BitId b : lvalue_bits(scope, e)) out.push_back(bit_gate(b));
        break;
      case ExprKind::Concat:
        for (auto it = e.args.rbegin(); it != e.args.rend(); ++it) {
          auto part = blast(scope, *it, natural_width(m, *it));
          out.insert(out.end(), part.begin(), part.end());
        }
        break;
      case ExprKind::Replicate: {
        auto inner = blast(scope, e.args[0], natural_width(m, e.args[0]));
        for (int i = 0; i < e.count; ++i) out.insert(out.end(), inner.begin(), inner.end());
        break;
      }
      case ExprKind::Unary: {
        if (e.unary == UnaryOp::BitNot) {
          for (GateId g : blast(scope, e.args[0], w)) out.push_back(add_gate(GateOp::Not, g));
          break;
        }
        int ow = natural_width(m, e.args[0]);
        auto bits = blast(scope, e.args[0], ow == 0 ? unsized_width(e.args[0]) : ow);
        switch (e.unary) {
          case UnaryOp::RedAnd: out.push_back(reduce(GateOp::And, bits)); break;
          case UnaryOp::RedOr: out.push_back(reduce(GateOp::Or, bits)); break;
          case UnaryOp::RedXor: out.push_back(reduce(GateOp::Xor, bits)); break;
          case UnaryOp::LogNot: out.push_back(add_gate(GateOp::Not, reduce(GateOp::Or, bits))); break;
          case UnaryOp::BitNot: break;
        }
        break;
      }
      case ExprKind::Binary: {
        if (e.binary == BinaryOp::Eq || e.binary == BinaryOp::Neq) {
          int ow = std::max(natural_width(m, e.args[0]), natural_width(m, e.args[1]));
          if (ow == 0) ow = std::max(unsized_width(e.args[0]), unsized_width(e.args[1]));
          auto a = blast(scope, e.args[0], ow);
          auto b = blast(scope, e.args[1], ow);
          std::vector<GateId> diff;
          for (int i = 0; i < ow; ++i) diff.push_back(add_gate(GateOp::Xor, a[i], b[i]));
          GateId any = reduce(GateOp::Or, diff);
          out.push_back(e.binary == BinaryOp::Neq ? any : add_gate(GateOp::Not, any));
          break;
        }
        auto a = blast(scope, e.args[0], w);
        auto b = blast(scope, e.args[1], w);
        GateOp op = e.binary == BinaryOp::And ? GateOp::And : e.binary == BinaryOp::Or ? GateOp::Or : GateOp::Xor;
        for (int i = 0; i < w; ++i) out.push_back(add_gate(op, a[i], b[i]));
        break;
      }
      case ExprKind::Ternary: {
        GateId sel = blast(scope, e.args[0], 1)[0];
        auto t = blast(scope, e.args[1], w);
        auto f = blast(scope, e.args[2], w);
        for (int i = 0; i < w; ++i) out.push_back(add_gate(GateOp::Mux, sel, t[i], f[i]));
        break;
      }
    }
    if (static_cast<int>(out.size()) != w)
      throw Error(ErrorCode::WidthMismatch,
                  "expression is " + std::to_string(out.size()) + " bits, expected " + std::to_string(w), e.loc);
    return out;
  }

  void collect_bits(GateId g, std::vector<BitId>& out, std::vector<std::uint8_t>& seen) const {
    std::vector<GateId> stack{g};
    while (!stack.empty()) {
      GateId cur = stack.back();
      stack.pop_back();
      if (seen[cur]) continue;
      seen[cur] = 1;
      const Gate& gate = gates_[cur];
      switch (gate.op) {
        case GateOp::Const0:
        case GateOp::Const1: break;
        case GateOp::Bit: out.push_back(gate.a); break;
        case GateOp::Not: stack.push_back(gate.a); break;
        case GateOp::And:
        case GateOp::Or:
        case GateOp::Xor:
          stack.push_back(gate.a);
          stack.push_back(gate.b);
          break;
        case GateOp::Mux:
          stack.push_back(gate.a);
          stack.push_back(gate.b);
          stack.push_back(gate.c);
          break;
      }
    }
  }

  void finish() {
    if (clocks_.size() > 1) {
      std::string names;
      for (const auto& c : clocks_) names += (names.empty() ? "" : ", ") + c;
      throw Error(ErrorCode::MultipleClocks, "design uses more than one clock: " + names);
    }
    if (!clocks_.empty()) {
      nl_.clock = *clocks_.begin();
      const NetSignal* top_clock = nullptr;
      for (const auto& s : nl_.signals)
        if (s.name == nl_.clock) top_clock = &s;
      if (!top_clock || top_clock->role != SignalRole::Input || top_clock->width != 1)
        throw Error(ErrorCode::UnsupportedConstruct, "clock '" + nl_.clock + "' is not a 1-bit primary input");
    }
    for (const auto& s : nl_.signals) {
      if (s.role == SignalRole::Input && s.width == 1 && (s.name == "reset" || s.name == "rst")) {
        nl_.reset = s.name;
        break;
      }
    }

    // Undriven bits: an error if anything reads them, otherwise tied low.
    std::vector<std::uint8_t> read(nl_.bits.size(), 0);
    for (const auto& g : gates_)
      if (g.op == GateOp::Bit) read[g.a] = 1;
    for (BitId b = 0; b < nl_.bits.size(); ++b) {
      if (driver_[b] != 0) continue;
      if (read[b]) throw Error(ErrorCode::UndrivenNet, "'" + nl_.bits[b].name + "' is read but never driven");
      combs_.push_back({b, kConst0});
      driver_[b] = 1;
    }

    // Topological order of combinational definitions.
    std::vector<std::int64_t> comb_of(nl_.bits.size(), -1);
    for (std::size_t i = 0; i < combs_.size(); ++i) comb_of[combs_[i].bit] = static_cast<std::int64_t>(i);
    std::vector<std::vector<BitId>> deps(combs_.size());
    {
      std::vector<std::uint8_t> seen(gates_.size(), 0);
      for (std::size_t i = 0; i < combs_.size(); ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        collect_bits(combs_[i].expr, deps[i], seen);
      }
    }
    std::vector<std::uint8_t> state(combs_.size(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<Comb> ordered;
    ordered.reserve(combs_.size());
    for (std::size_t root = 0; root < combs_.size(); ++root) {
      if (state[root]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < deps[node].size()) {
          BitId dep = deps[node][next++];
          std::int64_t c = comb_of[dep];
          if (c < 0) continue;
          auto ci = static_cast<std::size_t>(c);
          if (state[ci] == 1)
            throw Error(ErrorCode::CombinationalCycle,
                        "combinational cycle through '" + nl_.bits[dep].name + "'");
          if (state[ci] == 0) {
            state[ci] = 1;
            stack.emplace_back(ci, 0);
          }
        } else {
          state[node] = 2;
          ordered.push_back(combs_[node]);
          stack.pop_back();
        }
      }
    }
    nl_.combs = std::move(ordered);
    nl_.gates = std::move(gates_);
    nl_.rebuild_index();
  }

  std::unordered_map<std::string, const SourceModule*> modules_;
  Netlist nl_;
  std::vector<Gate> gates_;
  std::unordered_map<BitId, GateId> bit_gates_;
  std::vector<std::uint8_t> driver_;  // 0 none, 1 comb, 2 flop, 3 primary input
  std::vector<Comb> combs_;
  std::vector<std::string> stack_;
  std::set<std::string> clocks_;
};

}  // namespace

std::vector<Diagnostic> check_widths(std::span<const SourceModule> modules) {
  std::vector<Diagnostic> out;
  for (const auto& m : modules) {
    WidthChecker(m, out).run();
    for (const auto& s : m.stmts) {
      if (!m.width_of(s.lhs.name)) continue;  // reported as undeclared above
      if (s.kind == StmtKind::NonBlockingFF && !m.width_of(s.clock))
        out.push_back({Severity::Error, ErrorCode::UnknownSignal, m.name, s.loc,
                       "clock '" + s.clock + "' is not declared in module '" + m.name + "'"});
    }
  }
  return out;
}

Netlist elaborate(std::span<const SourceModule> modules, const std::string& top) {
  for (const auto& d : check_widths(modules))
    if (d.severity == Severity::Error) throw Error(d.code, d.message, d.loc);
  return Elaborator(modules).run(top);
}

}  // namespace simcheck::verilog
