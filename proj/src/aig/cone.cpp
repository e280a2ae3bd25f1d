#include "simcheck/aig/cone.hpp"

#include <algorithm>

namespace simcheck::aig {

std::vector<ConeFrame> cone_of_influence(const Aig& g, std::span<const AigLit> roots, int frames_back) {
  if (frames_back < 0) frames_back = 0;
  std::vector<ConeFrame> out(static_cast<std::size_t>(frames_back) + 1);
  std::vector<std::uint32_t> frontier;
  for (AigLit r : roots) frontier.push_back(r.node());

  std::vector<std::uint8_t> seen(g.num_nodes());
  for (int depth = 0; depth <= frames_back && !frontier.empty(); ++depth) {
    std::fill(seen.begin(), seen.end(), 0);
    ConeFrame& cf = out[static_cast<std::size_t>(depth)];
    std::vector<std::uint32_t> stack = std::move(frontier);
    frontier.clear();
    while (!stack.empty()) {
      std::uint32_t id = stack.back();
      stack.pop_back();
      if (seen[id]) continue;
      seen[id] = 1;
      const Node& n = g.node(id);
      switch (n.kind) {
        case NodeKind::ConstFalse: break;
        case NodeKind::Input: cf.inputs.push_back(n.index); break;
        case NodeKind::Reg:
          cf.registers.push_back(n.index);
          if (depth < frames_back) frontier.push_back(g.registers()[n.index].next.node());
          break;
        case NodeKind::And:
        case NodeKind::Xor:
          cf.gates.push_back(id);
          stack.push_back(n.a.node());
          stack.push_back(n.b.node());
          break;
      }
    }
    std::sort(cf.gates.begin(), cf.gates.end());
    std::sort(cf.inputs.begin(), cf.inputs.end());
    std::sort(cf.registers.begin(), cf.registers.end());
  }
  return out;
}

}  // namespace simcheck::aig
