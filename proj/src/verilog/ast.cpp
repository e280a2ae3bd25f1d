#include "simcheck/verilog/ast.hpp"

#include <algorithm>

namespace simcheck::verilog {

Expr Expr::constant(int width, std::uint64_t value, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Const;
  e.width = width;
  e.value = value;
  e.loc = loc;
  return e;
}

Expr Expr::ref(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Ref;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::bit_select(std::string name, int index, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::BitSelect;
  e.name = std::move(name);
  e.hi = index;
  e.lo = index;
  e.loc = loc;
  return e;
}

Expr Expr::part_select(std::string name, int hi, int lo, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::PartSelect;
  e.name = std::move(name);
  e.hi = hi;
  e.lo = lo;
  e.loc = loc;
  return e;
}

Expr Expr::concat(std::vector<Expr> parts, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Concat;
  e.args = std::move(parts);
  e.loc = loc;
  return e;
}

Expr Expr::replicate(int count, Expr inner, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Replicate;
  e.count = count;
  e.args.push_back(std::move(inner));
  e.loc = loc;
  return e;
}

Expr Expr::make_unary(UnaryOp op, Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Unary;
  e.unary = op;
  e.args.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::make_binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Binary;
  e.binary = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

Expr Expr::ternary(Expr cond, Expr then_e, Expr else_e, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::Ternary;
  e.args.push_back(std::move(cond));
  e.args.push_back(std::move(then_e));
  e.args.push_back(std::move(else_e));
  e.loc = loc;
  return e;
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case ExprKind::Const:
      if (a.width != b.width || a.value != b.value) return false;
      break;
    case ExprKind::Ref:
      if (a.name != b.name) return false;
      break;
    case ExprKind::BitSelect:
    case ExprKind::PartSelect:
      if (a.name != b.name || a.hi != b.hi || a.lo != b.lo) return false;
      break;
    case ExprKind::Replicate:
      if (a.count != b.count) return false;
      break;
    case ExprKind::Unary:
      if (a.unary != b.unary) return false;
      break;
    case ExprKind::Binary:
      if (a.binary != b.binary) return false;
      break;
    case ExprKind::Concat:
    case ExprKind::Ternary:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_structure(a.args[i], b.args[i])) return false;
  return true;
}

const PortDecl* SourceModule::find_port(const std::string& n) const {
  auto it = std::find_if(ports.begin(), ports.end(), [&](const PortDecl& p) { return p.name == n; });
  return it == ports.end() ? nullptr : &*it;
}

const NetDecl* SourceModule::find_decl(const std::string& n) const {
  auto it = std::find_if(decls.begin(), decls.end(), [&](const NetDecl& d) { return d.name == n; });
  return it == decls.end() ? nullptr : &*it;
}

std::optional<int> SourceModule::width_of(const std::string& n) const {
  if (auto* p = find_port(n)) return p->width();
  if (auto* d = find_decl(n)) return d->width();
  return std::nullopt;
}

int SourceModule::lsb_of(const std::string& n) const {
  if (auto* p = find_port(n)) return p->range ? p->range->lsb : 0;
  if (auto* d = find_decl(n)) return d->range ? d->range->lsb : 0;
  return 0;
}

bool same_structure(const SourceModule& a, const SourceModule& b) {
  if (a.name != b.name || a.ports.size() != b.ports.size() || a.decls.size() != b.decls.size() ||
      a.stmts.size() != b.stmts.size() || a.instances.size() != b.instances.size())
    return false;
  for (std::size_t i = 0; i < a.ports.size(); ++i) {
    const auto& p = a.ports[i];
    const auto& q = b.ports[i];
    if (p.name != q.name || p.dir != q.dir || p.kind != q.kind || p.range != q.range) return false;
  }
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const auto& p = a.decls[i];
    const auto& q = b.decls[i];
    if (p.name != q.name || p.kind != q.kind || p.range != q.range) return false;
  }
  for (std::size_t i = 0; i < a.stmts.size(); ++i) {
    const auto& s = a.stmts[i];
    const auto& t = b.stmts[i];
    if (s.kind != t.kind || s.clock != t.clock || !same_structure(s.lhs, t.lhs) ||
        !same_structure(s.rhs, t.rhs))
      return false;
  }
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    const auto& x = a.instances[i];
    const auto& y = b.instances[i];
    if (x.module != y.module || x.name != y.name || x.wildcard != y.wildcard ||
        x.connections.size() != y.connections.size())
      return false;
    for (std::size_t c = 0; c < x.connections.size(); ++c) {
      if (x.connections[c].port != y.connections[c].port ||
          !same_structure(x.connections[c].expr, y.connections[c].expr))
        return false;
    }
  }
  return true;
}

bool same_structure(const std::vector<SourceModule>& a, const std::vector<SourceModule>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_structure(a[i], b[i])) return false;
  return true;
}

}  // namespace simcheck::verilog
