#pragma once

#include "simcheck/aig/aig.hpp"
#include "simcheck/verilog/netlist.hpp"

namespace simcheck::aig {

/// Compiles an elaborated netlist into an AIG: one primary input per data
/// input bit (the clock is not an input; it reads as constant 0 in data
/// paths), one register per flop bit, and a name for every netlist bit.
/// Input and register order follow Netlist::data_inputs() and
/// Netlist::flops.
Aig compile(const verilog::Netlist& n);

}  // namespace simcheck::aig
