#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simcheck/error.hpp"

namespace simcheck::verilog {

enum class ExprKind { Const, Ref, BitSelect, PartSelect, Concat, Replicate, Unary, Binary, Ternary };

enum class UnaryOp { BitNot, RedAnd, RedOr, RedXor, LogNot };
enum class BinaryOp { And, Or, Xor, Eq, Neq };

/// Expression tree node. Which fields are meaningful depends on `kind`:
///   Const      width (0 = unsized), value
///   Ref        name
///   BitSelect  name, hi (the index)
///   PartSelect name, hi, lo
///   Concat     args (MSB first)
///   Replicate  count, args[0]
///   Unary      unary, args[0]
///   Binary     binary, args[0..1]
///   Ternary    args = {cond, then, else}
struct Expr {
  ExprKind kind = ExprKind::Const;
  SourceLoc loc;
  int width = 0;
  std::uint64_t value = 0;
  std::string name;
  int hi = 0;
  int lo = 0;
  int count = 0;
  UnaryOp unary = UnaryOp::BitNot;
  BinaryOp binary = BinaryOp::And;
  std::vector<Expr> args;

  static Expr constant(int width, std::uint64_t value, SourceLoc loc = {});
  static Expr ref(std::string name, SourceLoc loc = {});
  static Expr bit_select(std::string name, int index, SourceLoc loc = {});
  static Expr part_select(std::string name, int hi, int lo, SourceLoc loc = {});
  static Expr concat(std::vector<Expr> parts, SourceLoc loc = {});
  static Expr replicate(int count, Expr inner, SourceLoc loc = {});
  static Expr make_unary(UnaryOp op, Expr operand, SourceLoc loc = {});
  static Expr make_binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc = {});
  static Expr ternary(Expr cond, Expr then_e, Expr else_e, SourceLoc loc = {});

  bool is_lvalue() const {
    return kind == ExprKind::Ref || kind == ExprKind::BitSelect || kind == ExprKind::PartSelect;
  }
};

/// Structural equality; source locations are ignored.
bool same_structure(const Expr& a, const Expr& b);

struct Range {
  int msb = 0;
  int lsb = 0;
  int width() const { return msb - lsb + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

enum class PortDir { Input, Output };
enum class NetKind { Wire, Reg };

struct PortDecl {
  std::string name;
  PortDir dir = PortDir::Input;
  NetKind kind = NetKind::Wire;
  std::optional<Range> range;
  SourceLoc loc;
  int width() const { return range ? range->width() : 1; }
};

struct NetDecl {
  std::string name;
  NetKind kind = NetKind::Wire;
  std::optional<Range> range;
  SourceLoc loc;
  int width() const { return range ? range->width() : 1; }
};

enum class StmtKind { NonBlockingFF, BlockingComb };

struct Statement {
  StmtKind kind = StmtKind::BlockingComb;
  /// Set for BlockingComb statements written as `assign`; printing only.
  bool continuous = false;
  /// Posedge clock name for NonBlockingFF.
  std::string clock;
  Expr lhs;
  Expr rhs;
  SourceLoc loc;
};

struct Connection {
  std::string port;
  Expr expr;
  SourceLoc loc;
};

struct Instance {
  std::string module;
  std::string name;
  std::vector<Connection> connections;
  bool wildcard = false;  // `.*`
  SourceLoc loc;
};

struct SourceModule {
  std::string name;
  std::vector<PortDecl> ports;
  std::vector<NetDecl> decls;
  std::vector<Statement> stmts;
  std::vector<Instance> instances;
  SourceLoc loc;

  const PortDecl* find_port(const std::string& n) const;
  const NetDecl* find_decl(const std::string& n) const;
  /// Width of a port or declared net, if present.
  std::optional<int> width_of(const std::string& n) const;
  /// Least significant index of a port or declared net's range.
  int lsb_of(const std::string& n) const;
};

bool same_structure(const SourceModule& a, const SourceModule& b);
bool same_structure(const std::vector<SourceModule>& a, const std::vector<SourceModule>& b);

}  // namespace simcheck::verilog
