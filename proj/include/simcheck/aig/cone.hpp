#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simcheck/aig/aig.hpp"

namespace simcheck::aig {

/// What must be known at one frame to evaluate the roots. Depth 0 is the
/// frame of the roots; depth d is d frames earlier. All lists are sorted.
struct ConeFrame {
  std::vector<std::uint32_t> gates;      // And/Xor node ids evaluated at this depth
  std::vector<std::uint32_t> registers;  // register ordinals whose state is read
  std::vector<std::uint32_t> inputs;     // input ordinals read
};

/// Backward reachability from `roots` through combinational fanin and, for
/// registers at depth d < frames_back, through their next-state function at
/// depth d + 1. Registers reached at depth `frames_back` are leaves.
/// The result has frames_back + 1 entries and is monotone in frames_back.
std::vector<ConeFrame> cone_of_influence(const Aig& g, std::span<const AigLit> roots, int frames_back);

}  // namespace simcheck::aig
