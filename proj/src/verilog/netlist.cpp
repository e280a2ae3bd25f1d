#include "simcheck/verilog/netlist.hpp"

#include <algorithm>

namespace simcheck::verilog {

const NetSignal* Netlist::find_signal(const std::string& name) const {
  auto it = signal_index_.find(name);
  return it == signal_index_.end() ? nullptr : &signals[it->second];
}

std::optional<BitId> Netlist::find_bit(const std::string& name) const {
  auto it = bit_index_.find(name);
  if (it == bit_index_.end()) return std::nullopt;
  return it->second;
}

bool Netlist::is_clock_bit(BitId b) const { return !clock.empty() && bits[b].base == clock; }

std::vector<BitId> Netlist::data_inputs() const {
  std::vector<BitId> out;
  std::copy_if(inputs.begin(), inputs.end(), std::back_inserter(out),
               [&](BitId b) { return !is_clock_bit(b); });
  return out;
}

void Netlist::rebuild_index() {
  signal_index_.clear();
  bit_index_.clear();
  for (std::size_t i = 0; i < signals.size(); ++i) signal_index_[signals[i].name] = i;
  for (std::size_t i = 0; i < bits.size(); ++i) bit_index_[bits[i].name] = static_cast<BitId>(i);
}

}  // namespace simcheck::verilog
