#include "simcheck/check/tagging.hpp"

#include <algorithm>

#include "simcheck/error.hpp"

namespace simcheck::check {

using verilog::BitId;
using verilog::Netlist;

std::string_view to_string(SignalTag t) {
  switch (t) {
    case SignalTag::Wave: return "wave";
    case SignalTag::Rand: return "rand";
    case SignalTag::Free: return "free";
    case SignalTag::Fail: return "fail";
  }
  return "?";
}

std::optional<SignalTag> parse_tag(std::string_view s) {
  if (s == "wave") return SignalTag::Wave;
  if (s == "rand") return SignalTag::Rand;
  if (s == "free") return SignalTag::Free;
  if (s == "fail") return SignalTag::Fail;
  return std::nullopt;
}

SignalTag Tagging::tag_of(const std::string& input) const {
  auto it = input_tags.find(input);
  return it == input_tags.end() ? SignalTag::Wave : it->second;
}

namespace {

std::string leaf(const std::string& name) {
  auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

bool is_input_signal(const Netlist& n, const std::string& name) {
  const auto* s = n.find_signal(name);
  return s && s->role == verilog::SignalRole::Input && name.find('.') == std::string::npos;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Tagging default_tagging(const Netlist& n) {
  Tagging t;
  for (const auto& s : n.signals) {
    if (s.role != verilog::SignalRole::Input || s.name.find('.') != std::string::npos) continue;
    if (s.name == n.clock) continue;
    SignalTag tag = SignalTag::Wave;
    if (s.name != n.reset) {
      if (s.name.rfind("free_", 0) == 0) tag = SignalTag::Free;
      if (s.name.rfind("rand_", 0) == 0) tag = SignalTag::Rand;
    }
    t.input_tags[s.name] = tag;
  }
  for (const auto& s : n.signals)
    if (s.width == 1 && leaf(s.name).rfind("fail_", 0) == 0) t.fail_signals.push_back(n.bits[s.bits[0]].name);
  if (t.fail_signals.empty()) throw Error(ErrorCode::NoFailSignals, "no 1-bit signal named fail_* in the design");
  return t;
}

void apply_override(Tagging& t, const Netlist& n, const std::string& name, SignalTag tag) {
  const auto* sig = n.find_signal(name);
  auto bit = n.find_bit(name);
  if (!sig && !bit) throw Error(ErrorCode::UnknownSignal, "unknown signal '" + name + "'");
  if (tag == SignalTag::Fail) {
    if (!bit) throw Error(ErrorCode::BadTag, "'" + name + "' is wider than 1 bit and cannot be a fail signal");
    const std::string& bit_name = n.bits[*bit].name;
    if (std::find(t.fail_signals.begin(), t.fail_signals.end(), bit_name) == t.fail_signals.end())
      t.fail_signals.push_back(bit_name);
    return;
  }
  if (!sig || !is_input_signal(n, name))
    throw Error(ErrorCode::BadTag, "'" + name + "' is not a primary input; only inputs take wave/rand/free");
  if (name == n.clock) throw Error(ErrorCode::BadTag, "the clock cannot be tagged");
  if (name == n.reset && tag == SignalTag::Free) throw Error(ErrorCode::BadTag, "reset cannot be free");
  t.input_tags[name] = tag;
}

std::optional<char> sampled_bit(const Netlist& n, BitId bit, const vcd::SampledRun& run, std::size_t cycle) {
  const auto& nb = n.bits[bit];
  auto idx = run.find(nb.base);
  if (!idx) return std::nullopt;
  const auto* sig = n.find_signal(nb.base);
  int offset = sig ? nb.index - sig->lsb : 0;
  const vcd::SampledSignal& s = run.signals[*idx];
  if (offset >= s.width) return 'x';
  const vcd::Value& v = s.values.at(cycle);
  return v[v.size() - 1 - static_cast<std::size_t>(offset)];
}

bool rand_bit(std::uint64_t seed, const std::string& name, std::size_t frame, std::uint64_t salt) {
  std::uint64_t h = mix(seed ^ mix(fnv1a(name) ^ mix(static_cast<std::uint64_t>(frame) ^ mix(salt))));
  return (h >> 63) != 0;
}

Stimulus::Stimulus(const Netlist& n, const Tagging& t, const vcd::SampledRun& run)
    : seed_(t.rand_seed), cycles_(run.num_cycles()) {
  for (BitId b : n.data_inputs()) {
    const auto& nb = n.bits[b];
    SignalTag tag = t.tag_of(nb.base);
    tags_.push_back(tag);
    names_.push_back(nb.name);
    if (tag == SignalTag::Free) free_.push_back(tags_.size() - 1);
    std::vector<std::uint8_t> values;
    if (tag != SignalTag::Rand && run.find(nb.base)) {
      std::size_t unknown = 0;
      for (std::size_t c = 0; c < cycles_; ++c) {
        char v = *sampled_bit(n, b, run, c);
        if (v != '0' && v != '1') ++unknown;
        values.push_back(v == '1' ? 1 : 0);
      }
      if (unknown)
        warnings_.push_back("'" + nb.name + "' samples x/z in " + std::to_string(unknown) + " cycle(s); read as 0");
    } else if (tag == SignalTag::Wave) {
      throw Error(ErrorCode::MissingWaveSignal, "wave input '" + nb.base + "' is not in the waveform");
    }
    sampled_.push_back(std::move(values));
  }
}

bool Stimulus::fixed_value(std::size_t input, std::size_t frame) const {
  if (tags_[input] == SignalTag::Rand) return rand_bit(seed_, names_[input], frame, kRandSalt);
  return sampled_[input].at(frame) != 0;
}

bool Stimulus::bound_value(std::size_t input, std::size_t frame) const {
  if (!sampled_[input].empty()) return sampled_[input].at(frame) != 0;
  return rand_bit(seed_, names_[input], frame, kBindSalt);
}

std::vector<std::uint8_t> sample_flops(const Netlist& n, const vcd::SampledRun& run, std::size_t cycle,
                                       std::vector<std::string>& warnings) {
  std::vector<std::uint8_t> state;
  std::size_t missing = 0;
  std::size_t unknown = 0;
  for (const auto& f : n.flops) {
    auto v = sampled_bit(n, f.q, run, cycle);
    if (!v)
      ++missing;
    else if (*v != '0' && *v != '1')
      ++unknown;
    state.push_back(v == '1' ? 1 : 0);
  }
  if (missing)
    warnings.push_back(std::to_string(missing) + " register bit(s) not in the waveform; initialized to 0");
  if (unknown)
    warnings.push_back(std::to_string(unknown) + " register bit(s) sampled x/z at cycle " + std::to_string(cycle) +
                       "; initialized to 0");
  return state;
}

}  // namespace simcheck::check
