#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simcheck/verilog/ast.hpp"

namespace simcheck::verilog {

/// Parses the supported synthesizable subset: ANSI-style module headers,
/// wire/reg declarations, `assign`, `always @*` with blocking assignments,
/// `always @(posedge clk)` with nonblocking assignments, and module instances
/// with named or `.*` connections.
///
/// Throws Error(SyntaxError) with line/column, or
/// Error(UnsupportedConstruct) naming the construct.
std::vector<SourceModule> parse(std::string_view source);

std::string print(const Expr& e);
std::string print(const SourceModule& m);
std::string print(const std::vector<SourceModule>& modules);

}  // namespace simcheck::verilog
