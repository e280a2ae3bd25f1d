#pragma once

#include <cstddef>
#include <ostream>

#include "simcheck/aig/aig.hpp"

namespace simcheck::aig {

/// Writes ASCII AIGER 1.9 (`aag`). Xor nodes become three and-gates.
/// Latches are emitted without an explicit reset value. Inputs, latches and
/// outputs carry symbol-table entries. Returns the number of bytes written;
/// throws Error(IoError) if the stream fails.
std::size_t write_aiger(const Aig& g, std::ostream& sink);

}  // namespace simcheck::aig
