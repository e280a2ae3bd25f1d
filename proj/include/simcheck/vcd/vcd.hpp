#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simcheck::vcd {

/// A value is a string of '0' '1' 'x' 'z' digits, most significant first,
/// exactly as wide as its variable.
using Value = std::string;

struct Change {
  std::uint64_t time = 0;
  Value value;
  friend bool operator==(const Change&, const Change&) = default;
};

struct Var {
  std::string name;  // hierarchical, dot-separated: top.des.tmp
  std::string id_code;
  int width = 1;
};

struct Timescale {
  int magnitude = 1;
  std::string unit = "ns";
};

/// Parsed dump. Variables sharing an id code share one change list.
struct Waveform {
  std::vector<Var> vars;
  std::unordered_map<std::string, std::vector<Change>> changes;  // by id code
  Timescale timescale;
  std::vector<std::string> warnings;

  const Var* find_var(const std::string& hier_name) const;
  const std::vector<Change>& changes_of(const Var& v) const;
};

/// Parses the supported subset: $timescale, $scope/$upscope, $var,
/// $enddefinitions, #time, scalar and vector changes, $dumpvars/$dumpall/
/// $dumpon/$dumpoff blocks. Other declaration keywords are skipped with a
/// warning. Throws Error(MalformedVcd) with the byte offset in the message,
/// or Error(DuplicateIdCode) when an id code is declared twice with
/// different widths.
Waveform parse_vcd(std::istream& in);
Waveform parse_vcd_text(std::string_view text);

struct SampledSignal {
  std::string name;
  int width = 1;
  std::vector<Value> values;  // one per cycle
  friend bool operator==(const SampledSignal&, const SampledSignal&) = default;
};

/// Per-cycle view of a waveform. Cycle k holds every signal's value just
/// before the k-th rising edge of the clock.
struct SampledRun {
  std::string clock_name;
  std::vector<std::uint64_t> cycle_times;
  std::vector<SampledSignal> signals;
  std::vector<std::string> warnings;  // not part of equality

  std::size_t num_cycles() const { return cycle_times.size(); }
  /// Index of the signal whose hierarchical name equals `name` or ends with
  /// "." + name, preferring the fewest leading scope components.
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const SampledRun& a, const SampledRun& b) {
    return a.clock_name == b.clock_name && a.cycle_times == b.cycle_times && a.signals == b.signals;
  }
};

/// Throws Error(UnknownSignal) if `clock` is not a declared 1-bit var and
/// Error(NoClockEdges) if it never rises. `clock` is matched like
/// SampledRun::find.
SampledRun sample_at_clock(const Waveform& w, const std::string& clock);

/// Writes a run as VCD under one `$scope module top`. Signal names starting
/// with "top." are written relative to that scope, so parsing the output
/// yields the original names. The clock rises at every cycle time and falls
/// halfway to the next one; values for cycle k change at the edge of cycle
/// k - 1 (time 0 for k = 0). Returns bytes written; throws Error(IoError).
std::size_t write_vcd(const SampledRun& run, std::ostream& sink);

}  // namespace simcheck::vcd
