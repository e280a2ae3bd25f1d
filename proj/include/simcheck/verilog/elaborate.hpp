#pragma once

#include <span>
#include <string>
#include <vector>

#include "simcheck/verilog/ast.hpp"
#include "simcheck/verilog/netlist.hpp"

namespace simcheck::verilog {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  ErrorCode code = ErrorCode::WidthMismatch;
  std::string module;
  SourceLoc loc;
  std::string message;
};

/// Width rules are strict: bitwise operands must agree, unsized constants
/// take the width of their context, reductions and comparisons are 1 bit.
/// Also reports references to undeclared names.
std::vector<Diagnostic> check_widths(std::span<const SourceModule> modules);

/// Flattens the hierarchy under `top` into a single bit-level netlist.
/// Child signals are renamed `instance.signal`.
///
/// Throws Error with UnknownModule, PortMismatch, CombinationalCycle,
/// RecursiveInstance, MultipleDrivers, UndrivenNet, MultipleClocks,
/// NotAReg, UnknownSignal or WidthMismatch.
Netlist elaborate(std::span<const SourceModule> modules, const std::string& top);

}  // namespace simcheck::verilog
