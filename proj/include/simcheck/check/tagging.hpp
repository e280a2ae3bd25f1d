#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simcheck/vcd/vcd.hpp"
#include "simcheck/verilog/netlist.hpp"

namespace simcheck::check {

enum class SignalTag { Wave, Rand, Free, Fail };

std::string_view to_string(SignalTag t);
std::optional<SignalTag> parse_tag(std::string_view s);

/// Input tags are keyed by input signal name (the clock is never tagged).
/// Fail signals are 1-bit netlist bit names.
struct Tagging {
  std::map<std::string, SignalTag> input_tags;
  std::vector<std::string> fail_signals;
  std::uint64_t rand_seed = 0;

  SignalTag tag_of(const std::string& input) const;
  friend bool operator==(const Tagging&, const Tagging&) = default;
};

/// Prefix rule: inputs named free_* are Free, rand_* are Rand, the rest Wave;
/// clock and reset are always Wave. Every 1-bit signal whose leaf name starts
/// with fail_ is a fail signal. Throws Error(NoFailSignals) if there is none.
Tagging default_tagging(const verilog::Netlist& n);

/// Applies `name = tag` overrides. Throws Error(UnknownSignal) for names that
/// are neither inputs nor signals and Error(BadTag) for a wave/rand/free tag
/// on a non-input or a fail tag on a multi-bit signal.
void apply_override(Tagging& t, const verilog::Netlist& n, const std::string& name, SignalTag tag);

/// Value of netlist bit `bit` in `run` at `cycle`: '0', '1', 'x' or 'z', or
/// nothing when the signal is not in the run.
std::optional<char> sampled_bit(const verilog::Netlist& n, verilog::BitId bit, const vcd::SampledRun& run,
                                std::size_t cycle);

/// Deterministic pseudorandom bit for (seed, input bit name, frame, salt).
/// Pure, so every caller that asks again gets the same answer.
bool rand_bit(std::uint64_t seed, const std::string& name, std::size_t frame, std::uint64_t salt);

inline constexpr std::uint64_t kRandSalt = 0;
inline constexpr std::uint64_t kBindSalt = 1;

/// Per-frame values of the data inputs (Netlist::data_inputs() order) as the
/// check engine fixes them. The engine and the oracle both read from here so
/// they cannot disagree on a constant input.
class Stimulus {
 public:
  /// Throws Error(MissingWaveSignal) if a Wave input is absent from `run`.
  Stimulus(const verilog::Netlist& n, const Tagging& t, const vcd::SampledRun& run);

  std::size_t num_inputs() const { return tags_.size(); }
  std::size_t num_cycles() const { return cycles_; }
  SignalTag tag(std::size_t input) const { return tags_[input]; }
  const std::string& name(std::size_t input) const { return names_[input]; }
  const std::vector<std::size_t>& free_inputs() const { return free_; }

  /// Value of a Wave or Rand input. Wave x/z samples read as 0.
  bool fixed_value(std::size_t input, std::size_t frame) const;
  /// Value a Free input is bound to once its frame leaves the window: the
  /// waveform sample if the signal was dumped, otherwise a seeded bit.
  bool bound_value(std::size_t input, std::size_t frame) const;

  /// Warnings about x/z coercion, gathered at construction.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::uint64_t seed_ = 0;
  std::size_t cycles_ = 0;
  std::vector<SignalTag> tags_;
  std::vector<std::string> names_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<std::uint8_t>> sampled_;  // per input, per cycle; empty when not dumped
  std::vector<std::string> warnings_;
};

/// Register values sampled at `cycle`, in Netlist::flops order; x, z and
/// missing registers read as 0 and add a warning.
std::vector<std::uint8_t> sample_flops(const verilog::Netlist& n, const vcd::SampledRun& run, std::size_t cycle,
                                       std::vector<std::string>& warnings);

}  // namespace simcheck::check
