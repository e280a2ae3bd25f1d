#include "simcheck/aig/aiger.hpp"

#include <sstream>

#include "simcheck/error.hpp"

namespace simcheck::aig {

std::size_t write_aiger(const Aig& g, std::ostream& sink) {
  const std::size_t num_inputs = g.inputs().size();
  const std::size_t num_latches = g.registers().size();

  // AIGER variable for every node: inputs first, then latches, then gates.
  std::vector<std::uint32_t> var(g.num_nodes(), 0);
  std::uint32_t next_var = 1;
  for (std::uint32_t id : g.input_nodes()) var[id] = next_var++;
  for (const auto& r : g.registers()) var[r.state.node()] = next_var++;

  auto lit = [&](AigLit l) { return 2 * var[l.node()] + (l.negated() ? 1u : 0u); };

  std::ostringstream ands;
  std::size_t num_ands = 0;
  for (std::uint32_t id = 0; id < g.num_nodes(); ++id) {
    const Node& n = g.node(id);
    if (n.kind == NodeKind::And) {
      var[id] = next_var++;
      ands << 2 * var[id] << ' ' << lit(n.a) << ' ' << lit(n.b) << '\n';
      ++num_ands;
    } else if (n.kind == NodeKind::Xor) {
      // a ^ b = !(a & b) & !(!a & !b)
      std::uint32_t both = next_var++;
      std::uint32_t neither = next_var++;
      var[id] = next_var++;
      ands << 2 * both << ' ' << lit(n.a) << ' ' << lit(n.b) << '\n';
      ands << 2 * neither << ' ' << (lit(n.a) ^ 1u) << ' ' << (lit(n.b) ^ 1u) << '\n';
      ands << 2 * var[id] << ' ' << (2 * both + 1) << ' ' << (2 * neither + 1) << '\n';
      num_ands += 3;
    }
  }

  std::ostringstream out;
  out << "aag " << next_var - 1 << ' ' << num_inputs << ' ' << num_latches << ' ' << g.outputs().size() << ' '
      << num_ands << '\n';
  for (std::uint32_t id : g.input_nodes()) out << 2 * var[id] << '\n';
  for (const auto& r : g.registers()) out << 2 * var[r.state.node()] << ' ' << lit(r.next) << '\n';
  for (const auto& o : g.outputs()) out << lit(o.lit) << '\n';
  out << ands.str();
  for (std::size_t i = 0; i < num_inputs; ++i) out << 'i' << i << ' ' << g.inputs()[i].name << '\n';
  for (std::size_t i = 0; i < num_latches; ++i) out << 'l' << i << ' ' << g.registers()[i].info.name << '\n';
  for (std::size_t i = 0; i < g.outputs().size(); ++i) out << 'o' << i << ' ' << g.outputs()[i].name << '\n';
  if (g.num_nodes() > 1) out << "c\nsimcheck\n";

  const std::string text = out.str();
  sink << text;
  if (!sink) throw Error(ErrorCode::IoError, "failed to write AIGER output");
  return text.size();
}

}  // namespace simcheck::aig
