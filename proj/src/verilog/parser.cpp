#include "simcheck/verilog/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace simcheck::verilog {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLoc loc;
};

// Keywords outside the subset. They are rejected by name wherever they appear
// in item or statement position.
const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "initial",  "for",      "while",     "repeat",    "forever",  "generate", "endgenerate",
    "genvar",   "function", "task",      "integer",   "parameter", "localparam", "if",
    "else",     "case",     "casez",     "casex",     "negedge",  "signed",   "real",
    "time",     "defparam", "specify",   "primitive", "supply0",  "supply1",  "tri",
    "inout",    "wait",     "fork",      "always_ff", "always_comb", "logic", "event",
};

// Multi-character operators recognised by the lexer, longest first.
const char* const kMultiSymbols[] = {"===", "!==", "<<<", ">>>", "**", "<=", ">=", "==", "!=",
                                     "&&",  "||",  "<<",  ">>",  "~&", "~|", "~^", "^~", "->"};

// Binary operators outside the subset that may follow an operand.
const std::set<std::string, std::less<>> kUnsupportedBinary = {
    "+", "-", "*", "/", "%", "<", ">", "<=", ">=", "<<", ">>", "<<<", ">>>",
    "&&", "||", "===", "!==", "**", "^~", "~^", "->"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_' || src_[pos_] == '$'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
        t.kind = Tok::Number;
        lex_number(t);
      } else if (c == '`') {
        throw Error(ErrorCode::UnsupportedConstruct, "compiler directive", t.loc);
      } else if (c == '\\') {
        throw Error(ErrorCode::UnsupportedConstruct, "escaped identifier", t.loc);
      } else if (c == '$') {
        throw Error(ErrorCode::UnsupportedConstruct, "system task", t.loc);
      } else if (c == '"') {
        throw Error(ErrorCode::UnsupportedConstruct, "string literal", t.loc);
      } else {
        t.kind = Tok::Symbol;
        bool matched = false;
        for (const char* sym : kMultiSymbols) {
          std::string_view s(sym);
          if (src_.substr(pos_, s.size()) == s) {
            for (std::size_t i = 0; i < s.size(); ++i) t.text += advance();
            matched = true;
            break;
          }
        }
        if (!matched) {
          if (std::string_view("()[]{};:,.?@#=&|^~!+-*/%<>").find(c) == std::string_view::npos)
            throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", t.loc);
          t.text += advance();
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (src_.substr(pos_, 2) == "/*") {
        SourceLoc start{line_, col_};
        advance();
        advance();
        while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") advance();
        if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "unterminated comment", start);
        advance();
        advance();
      } else if (c == '(' && src_.substr(pos_, 2) == "(*" && src_.substr(pos_, 3) != "(*)") {
        throw Error(ErrorCode::UnsupportedConstruct, "attribute instance", {line_, col_});
      } else {
        return;
      }
    }
  }

  // Raw number text: decimal digits, optionally followed by 'b / 'h / 'd / 'o
  // and digits. Validation happens in the parser.
  void lex_number(Token& t) {
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      t.text += advance();
    std::size_t save = pos_;
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '\'') {
      col_ += static_cast<int>(pos_ - save);
      t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == 's' || src_[pos_] == 'S'))
        throw Error(ErrorCode::UnsupportedConstruct, "signed constant", t.loc);
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_' || src_[pos_] == '?'))
        t.text += advance();
    } else {
      pos_ = save;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<SourceModule> run() {
    std::vector<SourceModule> mods;
    std::set<std::string> names;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Ident && peek().text == "module") {
        auto m = parse_module();
        if (!names.insert(m.name).second)
          throw Error(ErrorCode::Redeclared, "module '" + m.name + "' defined twice", m.loc);
        mods.push_back(std::move(m));
      } else {
        reject_if_unsupported(peek());
        throw syntax("expected 'module'");
      }
    }
    return mods;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is_sym(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Symbol && peek(k).text == s;
  }
  bool is_kw(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool accept_sym(const char* s) {
    if (!is_sym(s)) return false;
    take();
    return true;
  }
  bool accept_kw(const char* s) {
    if (!is_kw(s)) return false;
    take();
    return true;
  }

  Error syntax(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return Error(ErrorCode::SyntaxError, what + ", found " + found, t.loc);
  }

  static void reject_if_unsupported(const Token& t) {
    if (t.kind == Tok::Ident && kUnsupportedKeywords.count(t.text))
      throw Error(ErrorCode::UnsupportedConstruct, "'" + t.text + "' is not supported", t.loc);
  }

  void expect_sym(const char* s) {
    if (!accept_sym(s)) throw syntax(std::string("expected '") + s + "'");
  }
  void expect_kw(const char* s) {
    if (!accept_kw(s)) throw syntax(std::string("expected '") + s + "'");
  }

  static bool is_reserved(const std::string& s) {
    static const std::set<std::string, std::less<>> reserved = {
        "module", "endmodule", "input", "output", "wire", "reg", "assign", "always",
        "posedge", "begin", "end"};
    return reserved.count(s) > 0 || kUnsupportedKeywords.count(s) > 0;
  }

  std::string expect_ident(const char* what) {
    reject_if_unsupported(peek());
    if (peek().kind != Tok::Ident || is_reserved(peek().text))
      throw syntax(std::string("expected ") + what);
    return take().text;
  }

  int expect_int() {
    if (peek().kind != Tok::Number || peek().text.find('\'') != std::string::npos)
      throw syntax("expected integer");
    Token t = take();
    std::string digits;
    for (char c : t.text)
      if (c != '_') digits += c;
    if (digits.size() > 9) throw Error(ErrorCode::UnsupportedConstruct, "integer too large", t.loc);
    return std::stoi(digits);
  }

  Range parse_range() {
    SourceLoc loc = peek().loc;
    expect_sym("[");
    Range r;
    r.msb = expect_int();
    expect_sym(":");
    r.lsb = expect_int();
    expect_sym("]");
    if (r.msb < r.lsb)
      throw Error(ErrorCode::UnsupportedConstruct, "ascending range [lsb:msb]", loc);
    return r;
  }

  SourceModule parse_module() {
    SourceModule m;
    m.loc = peek().loc;
    expect_kw("module");
    m.name = expect_ident("module name");
    if (is_sym("#")) throw Error(ErrorCode::UnsupportedConstruct, "module parameters", peek().loc);
    if (accept_sym("(")) {
      if (!accept_sym(")")) {
        parse_ports(m);
        expect_sym(")");
      }
    }
    expect_sym(";");
    while (!is_kw("endmodule")) {
      if (peek().kind == Tok::End) throw syntax("expected 'endmodule'");
      parse_item(m);
    }
    take();
    return m;
  }

  void parse_ports(SourceModule& m) {
    std::optional<PortDecl> proto;
    for (;;) {
      SourceLoc loc = peek().loc;
      reject_if_unsupported(peek());
      if (is_kw("input") || is_kw("output")) {
        PortDecl p;
        p.dir = take().text == "input" ? PortDir::Input : PortDir::Output;
        if (accept_kw("reg")) {
          if (p.dir == PortDir::Input) throw Error(ErrorCode::SyntaxError, "input port cannot be reg", loc);
          p.kind = NetKind::Reg;
        } else {
          accept_kw("wire");
        }
        reject_if_unsupported(peek());
        if (is_sym("[")) p.range = parse_range();
        proto = p;
      } else if (!proto) {
        throw Error(ErrorCode::UnsupportedConstruct, "non-ANSI port list", loc);
      }
      PortDecl p = *proto;
      p.loc = peek().loc;
      p.name = expect_ident("port name");
      if (m.find_port(p.name))
        throw Error(ErrorCode::Redeclared, "port '" + p.name + "' declared twice", p.loc);
      m.ports.push_back(std::move(p));
      if (!accept_sym(",")) break;
    }
  }

  void parse_item(SourceModule& m) {
    const Token& t = peek();
    reject_if_unsupported(t);
    if (t.kind != Tok::Ident) throw syntax("expected module item");
    if (t.text == "input" || t.text == "output")
      throw Error(ErrorCode::UnsupportedConstruct, "port declaration in module body", t.loc);
    if (t.text == "wire" || t.text == "reg") {
      parse_decl(m);
    } else if (t.text == "assign") {
      SourceLoc loc = take().loc;
      Statement s;
      s.kind = StmtKind::BlockingComb;
      s.continuous = true;
      s.loc = loc;
      s.lhs = parse_lvalue();
      expect_sym("=");
      s.rhs = parse_expr();
      expect_sym(";");
      m.stmts.push_back(std::move(s));
    } else if (t.text == "always") {
      parse_always(m);
    } else if (!is_reserved(t.text) && peek(1).kind == Tok::Ident) {
      parse_instance(m);
    } else {
      throw syntax("expected module item");
    }
  }

  void parse_decl(SourceModule& m) {
    NetKind kind = take().text == "reg" ? NetKind::Reg : NetKind::Wire;
    reject_if_unsupported(peek());
    std::optional<Range> range;
    if (is_sym("[")) range = parse_range();
    for (;;) {
      SourceLoc nloc = peek().loc;
      std::string name = expect_ident("net name");
      if (is_sym("=")) throw Error(ErrorCode::UnsupportedConstruct, "net declaration assignment", peek().loc);
      if (is_sym("[")) throw Error(ErrorCode::UnsupportedConstruct, "memory declaration", peek().loc);
      auto port = std::find_if(m.ports.begin(), m.ports.end(),
                               [&](const PortDecl& p) { return p.name == name; });
      if (port != m.ports.end()) {
        // `output x; reg x;` style: upgrade the port to a reg.
        PortDecl& p = *port;
        if (kind != NetKind::Reg || p.dir != PortDir::Output || p.kind == NetKind::Reg ||
            p.width() != (range ? range->width() : 1))
          throw Error(ErrorCode::Redeclared, "'" + name + "' redeclares a port", nloc);
        p.kind = NetKind::Reg;
      } else if (m.find_decl(name)) {
        throw Error(ErrorCode::Redeclared, "'" + name + "' declared twice", nloc);
      } else {
        m.decls.push_back(NetDecl{name, kind, range, nloc});
      }
      if (!accept_sym(",")) break;
    }
    expect_sym(";");
  }

  void parse_always(SourceModule& m) {
    SourceLoc loc = take().loc;
    expect_sym("@");
    std::string clock;
    bool comb = false;
    if (accept_sym("*")) {
      comb = true;
    } else {
      expect_sym("(");
      if (accept_sym("*")) {
        comb = true;
      } else {
        reject_if_unsupported(peek());
        if (!accept_kw("posedge"))
          throw Error(ErrorCode::UnsupportedConstruct, "explicit sensitivity list", peek().loc);
        clock = expect_ident("clock name");
        if (is_kw("or") || is_sym(","))
          throw Error(ErrorCode::UnsupportedConstruct, "multi-edge sensitivity list", peek().loc);
      }
      expect_sym(")");
    }
    parse_stmt(m, comb, clock, loc);
  }

  void parse_stmt(SourceModule& m, bool comb, const std::string& clock, SourceLoc always_loc) {
    reject_if_unsupported(peek());
    if (accept_kw("begin")) {
      if (accept_sym(":")) throw Error(ErrorCode::UnsupportedConstruct, "named block", peek().loc);
      while (!accept_kw("end")) {
        if (peek().kind == Tok::End) throw syntax("expected 'end'");
        parse_stmt(m, comb, clock, always_loc);
      }
      return;
    }
    Statement s;
    s.loc = peek().loc;
    s.lhs = parse_lvalue();
    if (comb) {
      if (is_sym("<="))
        throw Error(ErrorCode::UnsupportedConstruct, "nonblocking assignment in combinational block",
                    peek().loc);
      expect_sym("=");
      s.kind = StmtKind::BlockingComb;
    } else {
      if (is_sym("="))
        throw Error(ErrorCode::UnsupportedConstruct, "blocking assignment in clocked block", peek().loc);
      expect_sym("<=");
      s.kind = StmtKind::NonBlockingFF;
      s.clock = clock;
    }
    s.rhs = parse_expr();
    expect_sym(";");
    m.stmts.push_back(std::move(s));
  }

  void parse_instance(SourceModule& m) {
    Instance inst;
    inst.loc = peek().loc;
    inst.module = take().text;
    if (is_sym("#")) throw Error(ErrorCode::UnsupportedConstruct, "parameter override", peek().loc);
    inst.name = expect_ident("instance name");
    if (is_sym("[")) throw Error(ErrorCode::UnsupportedConstruct, "instance array", peek().loc);
    expect_sym("(");
    if (!is_sym(")")) {
      for (;;) {
        SourceLoc cloc = peek().loc;
        expect_sym(".");
        if (accept_sym("*")) {
          if (inst.wildcard) throw Error(ErrorCode::SyntaxError, "duplicate '.*'", cloc);
          inst.wildcard = true;
        } else {
          Connection c;
          c.loc = cloc;
          c.port = expect_ident("port name");
          expect_sym("(");
          if (is_sym(")"))
            throw Error(ErrorCode::UnsupportedConstruct, "unconnected port '" + c.port + "'", cloc);
          c.expr = parse_expr();
          expect_sym(")");
          for (const auto& other : inst.connections)
            if (other.port == c.port)
              throw Error(ErrorCode::PortMismatch, "port '" + c.port + "' connected twice", cloc);
          inst.connections.push_back(std::move(c));
        }
        if (!accept_sym(",")) break;
      }
    }
    expect_sym(")");
    expect_sym(";");
    m.instances.push_back(std::move(inst));
  }

  Expr parse_lvalue() {
    SourceLoc loc = peek().loc;
    if (is_sym("{")) throw Error(ErrorCode::UnsupportedConstruct, "concatenation as assignment target", loc);
    std::string name = expect_ident("assignment target");
    return parse_select(std::move(name), loc);
  }

  Expr parse_select(std::string name, SourceLoc loc) {
    if (!accept_sym("[")) return Expr::ref(std::move(name), loc);
    int hi = expect_int();
    if (is_sym("+") || is_sym("-"))
      throw Error(ErrorCode::UnsupportedConstruct, "indexed part-select", peek().loc);
    if (accept_sym(":")) {
      int lo = expect_int();
      expect_sym("]");
      if (hi < lo) throw Error(ErrorCode::UnsupportedConstruct, "ascending part-select", loc);
      return Expr::part_select(std::move(name), hi, lo, loc);
    }
    expect_sym("]");
    return Expr::bit_select(std::move(name), hi, loc);
  }

  Expr parse_expr() {
    Expr e = parse_ternary();
    if (peek().kind == Tok::Symbol && kUnsupportedBinary.count(peek().text))
      throw Error(ErrorCode::UnsupportedConstruct, "operator '" + peek().text + "'", peek().loc);
    return e;
  }

  Expr parse_ternary() {
    Expr cond = parse_or();
    if (!is_sym("?")) return cond;
    SourceLoc loc = take().loc;
    Expr t = parse_ternary();
    expect_sym(":");
    Expr f = parse_ternary();
    return Expr::ternary(std::move(cond), std::move(t), std::move(f), loc);
  }

  Expr parse_or() {
    Expr lhs = parse_xor();
    while (is_sym("|")) {
      SourceLoc loc = take().loc;
      lhs = Expr::make_binary(BinaryOp::Or, std::move(lhs), parse_xor(), loc);
    }
    return lhs;
  }

  Expr parse_xor() {
    Expr lhs = parse_and();
    while (is_sym("^")) {
      SourceLoc loc = take().loc;
      lhs = Expr::make_binary(BinaryOp::Xor, std::move(lhs), parse_and(), loc);
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_eq();
    while (is_sym("&")) {
      SourceLoc loc = take().loc;
      lhs = Expr::make_binary(BinaryOp::And, std::move(lhs), parse_eq(), loc);
    }
    return lhs;
  }

  Expr parse_eq() {
    Expr lhs = parse_unary();
    while (is_sym("==") || is_sym("!=")) {
      SourceLoc loc = peek().loc;
      BinaryOp op = take().text == "==" ? BinaryOp::Eq : BinaryOp::Neq;
      lhs = Expr::make_binary(op, std::move(lhs), parse_unary(), loc);
    }
    return lhs;
  }

  Expr parse_unary() {
    SourceLoc loc = peek().loc;
    if (peek().kind == Tok::Symbol) {
      const std::string& s = peek().text;
      if (s == "~") { take(); return Expr::make_unary(UnaryOp::BitNot, parse_unary(), loc); }
      if (s == "&") { take(); return Expr::make_unary(UnaryOp::RedAnd, parse_unary(), loc); }
      if (s == "|") { take(); return Expr::make_unary(UnaryOp::RedOr, parse_unary(), loc); }
      if (s == "^") { take(); return Expr::make_unary(UnaryOp::RedXor, parse_unary(), loc); }
      if (s == "!") { take(); return Expr::make_unary(UnaryOp::LogNot, parse_unary(), loc); }
      if (s == "~&" || s == "~|" || s == "~^" || s == "^~") {
        UnaryOp red = s == "~&" ? UnaryOp::RedAnd : s == "~|" ? UnaryOp::RedOr : UnaryOp::RedXor;
        take();
        return Expr::make_unary(UnaryOp::BitNot, Expr::make_unary(red, parse_unary(), loc), loc);
      }
      if (s == "-" || s == "+")
        throw Error(ErrorCode::UnsupportedConstruct, "arithmetic operator '" + s + "'", loc);
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = peek();
    SourceLoc loc = t.loc;
    if (t.kind == Tok::Number) return parse_number();
    if (t.kind == Tok::Ident) {
      reject_if_unsupported(t);
      std::string name = expect_ident("expression");
      if (is_sym("(")) throw Error(ErrorCode::UnsupportedConstruct, "function call", loc);
      return parse_select(std::move(name), loc);
    }
    if (accept_sym("(")) {
      Expr e = parse_expr();
      expect_sym(")");
      return e;
    }
    if (accept_sym("{")) {
      Expr first = parse_expr();
      if (accept_sym("{")) {
        if (first.kind != ExprKind::Const || first.width != 0)
          throw Error(ErrorCode::UnsupportedConstruct, "non-constant replication count", first.loc);
        if (first.value == 0 || first.value > 4096)
          throw Error(ErrorCode::WidthMismatch, "replication count out of range", first.loc);
        std::vector<Expr> parts;
        parts.push_back(parse_expr());
        while (accept_sym(",")) parts.push_back(parse_expr());
        expect_sym("}");
        expect_sym("}");
        Expr inner = parts.size() == 1 ? std::move(parts[0]) : Expr::concat(std::move(parts), loc);
        return Expr::replicate(static_cast<int>(first.value), std::move(inner), loc);
      }
      std::vector<Expr> parts;
      parts.push_back(std::move(first));
      while (accept_sym(",")) parts.push_back(parse_expr());
      expect_sym("}");
      return Expr::concat(std::move(parts), loc);
    }
    throw syntax("expected expression");
  }

  Expr parse_number() {
    Token t = take();
    std::string text;
    for (char c : t.text)
      if (c != '_') text += c;
    auto tick = text.find('\'');
    if (tick == std::string::npos) {
      if (text.size() > 19) throw Error(ErrorCode::UnsupportedConstruct, "constant wider than 64 bits", t.loc);
      return Expr::constant(0, std::stoull(text), t.loc);
    }
    if (tick == 0) throw Error(ErrorCode::UnsupportedConstruct, "unsized based constant", t.loc);
    int width = std::stoi(text.substr(0, tick));
    if (width <= 0) throw Error(ErrorCode::SyntaxError, "zero-width constant", t.loc);
    if (width > 64) throw Error(ErrorCode::UnsupportedConstruct, "constant wider than 64 bits", t.loc);
    if (tick + 1 >= text.size()) throw Error(ErrorCode::SyntaxError, "malformed constant", t.loc);
    char base = static_cast<char>(std::tolower(static_cast<unsigned char>(text[tick + 1])));
    std::string digits = text.substr(tick + 2);
    if (digits.empty()) throw Error(ErrorCode::SyntaxError, "malformed constant", t.loc);
    int radix = base == 'b' ? 2 : base == 'o' ? 8 : base == 'd' ? 10 : base == 'h' ? 16 : 0;
    if (radix == 0) throw Error(ErrorCode::SyntaxError, "unknown constant base", t.loc);
    unsigned __int128 v = 0;
    for (char c : digits) {
      char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lc == 'x' || lc == 'z' || lc == '?')
        throw Error(ErrorCode::UnsupportedConstruct, "x/z constant", t.loc);
      int d = std::isdigit(static_cast<unsigned char>(lc)) ? lc - '0'
              : (lc >= 'a' && lc <= 'f') ? lc - 'a' + 10
                                         : 99;
      if (d >= radix) throw Error(ErrorCode::SyntaxError, "invalid digit in constant", t.loc);
      v = v * radix + d;
      if (v >> 64) throw Error(ErrorCode::WidthMismatch, "constant does not fit its width", t.loc);
    }
    auto value = static_cast<std::uint64_t>(v);
    if (width < 64 && (value >> width) != 0)
      throw Error(ErrorCode::WidthMismatch, "constant does not fit its width", t.loc);
    return Expr::constant(width, value, t.loc);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const char* unary_text(UnaryOp op) {
  switch (op) {
    case UnaryOp::BitNot: return "~";
    case UnaryOp::RedAnd: return "&";
    case UnaryOp::RedOr: return "|";
    case UnaryOp::RedXor: return "^";
    case UnaryOp::LogNot: return "!";
  }
  return "?";
}

const char* binary_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return "&";
    case BinaryOp::Or: return "|";
    case BinaryOp::Xor: return "^";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Neq: return "!=";
  }
  return "?";
}

void print_range(std::ostream& os, const std::optional<Range>& r) {
  if (r) os << '[' << r->msb << ':' << r->lsb << "] ";
}

}  // namespace

std::vector<SourceModule> parse(std::string_view source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  return parser.run();
}

std::string print(const Expr& e) {
  std::ostringstream os;
  switch (e.kind) {
    case ExprKind::Const:
      if (e.width == 0) {
        os << e.value;
      } else {
        os << e.width << "'b";
        for (int i = e.width - 1; i >= 0; --i) os << ((e.value >> i) & 1u);
      }
      break;
    case ExprKind::Ref: os << e.name; break;
    case ExprKind::BitSelect: os << e.name << '[' << e.hi << ']'; break;
    case ExprKind::PartSelect: os << e.name << '[' << e.hi << ':' << e.lo << ']'; break;
    case ExprKind::Concat:
      os << '{';
      for (std::size_t i = 0; i < e.args.size(); ++i) os << (i ? ", " : "") << print(e.args[i]);
      os << '}';
      break;
    case ExprKind::Replicate: os << '{' << e.count << '{' << print(e.args[0]) << "}}"; break;
    case ExprKind::Unary: {
      const Expr& a = e.args[0];
      bool paren = a.kind == ExprKind::Unary || a.kind == ExprKind::Binary || a.kind == ExprKind::Ternary;
      os << unary_text(e.unary) << (paren ? "(" : "") << print(a) << (paren ? ")" : "");
      break;
    }
    case ExprKind::Binary:
      os << '(' << print(e.args[0]) << ' ' << binary_text(e.binary) << ' ' << print(e.args[1]) << ')';
      break;
    case ExprKind::Ternary:
      os << '(' << print(e.args[0]) << " ? " << print(e.args[1]) << " : " << print(e.args[2]) << ')';
      break;
  }
  return os.str();
}

std::string print(const SourceModule& m) {
  std::ostringstream os;
  os << "module " << m.name << '(';
  for (std::size_t i = 0; i < m.ports.size(); ++i) {
    const auto& p = m.ports[i];
    os << (i ? ", " : "") << (p.dir == PortDir::Input ? "input " : "output ");
    if (p.kind == NetKind::Reg) os << "reg ";
    print_range(os, p.range);
    os << p.name;
  }
  os << ");\n";
  for (const auto& d : m.decls) {
    os << "  " << (d.kind == NetKind::Reg ? "reg " : "wire ");
    print_range(os, d.range);
    os << d.name << ";\n";
  }
  for (const auto& s : m.stmts) {
    if (s.kind == StmtKind::NonBlockingFF)
      os << "  always @(posedge " << s.clock << ") " << print(s.lhs) << " <= " << print(s.rhs) << ";\n";
    else if (s.continuous)
      os << "  assign " << print(s.lhs) << " = " << print(s.rhs) << ";\n";
    else
      os << "  always @* " << print(s.lhs) << " = " << print(s.rhs) << ";\n";
  }
  for (const auto& inst : m.instances) {
    os << "  " << inst.module << ' ' << inst.name << '(';
    bool first = true;
    for (const auto& c : inst.connections) {
      os << (first ? "" : ", ") << '.' << c.port << '(' << print(c.expr) << ')';
      first = false;
    }
    if (inst.wildcard) os << (first ? "" : ", ") << ".*";
    os << ");\n";
  }
  os << "endmodule\n";
  return os.str();
}

std::string print(const std::vector<SourceModule>& modules) {
  std::string out;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    if (i) out += '\n';
    out += print(modules[i]);
  }
  return out;
}

}  // namespace simcheck::verilog
