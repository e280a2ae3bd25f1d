#pragma once

// Shared helpers for the test binaries: shipped-design loading, a random
// design generator, random waveforms, and a small ASCII AIGER evaluator used
// to cross-check the AIGER writer.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <fstream>
#include <istream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simcheck/check/engine.hpp"
#include "simcheck/vcd/vcd.hpp"

namespace testkit {

inline std::string source_path(const std::string& rel) { return std::string(SIMCHECK_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<const simcheck::check::Design> toy_design() {
  return simcheck::check::build_design(slurp(source_path("designs/toy/toy.v")), "top");
}

inline simcheck::vcd::SampledRun toy_run(const std::string& which = "toy_op1.vcd") {
  auto w = simcheck::vcd::parse_vcd_text(slurp(source_path("designs/toy/" + which)));
  return simcheck::vcd::sample_at_clock(w, "clk");
}

inline std::shared_ptr<const simcheck::check::Design> arbiter_design() {
  return simcheck::check::build_design(slurp(source_path("designs/arbiter/arbiter.v")), "arb_top");
}

// ---------------------------------------------------------------------------
// Random designs

struct RandomDesign {
  std::string source;  // module `rtop`
  int free_bits = 0;   // free_* input bits per frame
  int flop_bits = 0;
};

struct Operand {
  std::string text;
};

/// Generates a module with a reset, up to three free/wave/rand inputs,
/// 1..max_flops register bits and one to three fail signals. Every
/// expression is 1 bit wide so width rules never bite.
inline RandomDesign random_design(std::mt19937_64& rng, int max_flops = 16, int max_free_bits = 2) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  RandomDesign d;
  std::vector<std::string> ports = {"input clk", "input reset"};
  std::vector<std::string> leaves;
  auto add_input = [&](const std::string& name, int width) {
    ports.push_back(width == 1 ? "input " + name : "input [" + std::to_string(width - 1) + ":0] " + name);
    for (int b = 0; b < width; ++b) leaves.push_back(width == 1 ? name : name + "[" + std::to_string(b) + "]");
  };
  int fw = 1 + pick(max_free_bits);
  add_input("free_a", fw);
  d.free_bits = fw;
  if (pick(2)) add_input("wave_b", 1 + pick(2));
  if (pick(2)) add_input("rand_c", 1);

  int flops = 1 + pick(max_flops);
  std::vector<std::pair<std::string, int>> regs;
  for (int left = flops; left > 0;) {
    int w = std::min(left, 1 + pick(3));
    regs.push_back({"r" + std::to_string(regs.size()), w});
    left -= w;
  }
  d.flop_bits = flops;
  std::vector<std::string> reg_leaves;
  for (auto& [name, w] : regs)
    for (int b = 0; b < w; ++b) reg_leaves.push_back(w == 1 ? name : name + "[" + std::to_string(b) + "]");

  std::vector<std::string> all = leaves;
  all.insert(all.end(), reg_leaves.begin(), reg_leaves.end());
  std::function<std::string(int)> expr = [&](int depth) -> std::string {
    if (depth == 0 || pick(4) == 0) {
      std::string leaf = all[static_cast<std::size_t>(pick(static_cast<int>(all.size())))];
      return pick(3) == 0 ? "~" + leaf : leaf;
    }
    switch (pick(5)) {
      case 0: return "(" + expr(depth - 1) + " & " + expr(depth - 1) + ")";
      case 1: return "(" + expr(depth - 1) + " | " + expr(depth - 1) + ")";
      case 2: return "(" + expr(depth - 1) + " ^ " + expr(depth - 1) + ")";
      case 3: return "~" + expr(depth - 1);
      default: return "(" + expr(depth - 1) + " ? " + expr(depth - 1) + " : " + expr(depth - 1) + ")";
    }
  };

  int nfails = 1 + pick(3);
  std::ostringstream body;
  for (auto& [name, w] : regs)
    body << "  reg " << (w == 1 ? "" : "[" + std::to_string(w - 1) + ":0] ") << name << ";\n";
  for (auto& [name, w] : regs) {
    std::string next;
    if (w == 1) {
      next = expr(3);
    } else {
      next = "{";
      for (int b = w - 1; b >= 0; --b) next += expr(3) + (b ? ", " : "}");
    }
    std::string init = std::to_string(w) + "'b" + std::string(static_cast<std::size_t>(w), pick(2) ? '1' : '0');
    body << "  always @(posedge clk) " << name << " <= reset ? " << init << " : " << next << ";\n";
  }
  for (int f = 0; f < nfails; ++f) {
    std::string name = "fail_" + std::to_string(f);
    ports.push_back("output " + name);
    // A conjunction of a few terms keeps fails neither always nor never raised.
    std::string e = expr(2);
    for (int k = pick(3); k >= 0; --k) e = "(" + e + " & " + expr(2) + ")";
    if (pick(2)) {
      body << "  reg " << name << ";\n  always @(posedge clk) " << name << " <= " << e << ";\n";
    } else {
      body << "  assign " << name << " = " << e << ";\n";
    }
  }
  std::ostringstream src;
  src << "module rtop (";
  for (std::size_t i = 0; i < ports.size(); ++i) src << (i ? ", " : "") << ports[i];
  src << ");\n" << body.str() << "endmodule\n";
  d.source = src.str();
  return d;
}

/// A waveform for `n` with reset high for `reset_cycles`, random values on
/// every input except `undumped`, and random register samples so the anchor
/// state is not always the reset state.
inline simcheck::vcd::SampledRun random_run(const simcheck::verilog::Netlist& n, std::mt19937_64& rng,
                                            std::size_t cycles, std::size_t reset_cycles,
                                            const std::vector<std::string>& undumped = {}) {
  simcheck::vcd::SampledRun run;
  run.clock_name = n.clock;
  for (std::size_t k = 0; k < cycles; ++k) run.cycle_times.push_back(10 * k + 5);
  auto bits = [&](int w) {
    std::string v;
    for (int b = 0; b < w; ++b) v += (rng() & 1) ? '1' : '0';
    return v;
  };
  for (const auto& s : n.signals) {
    if (s.name == n.clock) continue;
    bool is_input = s.role == simcheck::verilog::SignalRole::Input && s.name.find('.') == std::string::npos;
    bool is_reg = false;
    for (const auto& f : n.flops)
      if (n.bits[f.q].base == s.name) is_reg = true;
    if (!is_input && !is_reg) continue;
    if (std::find(undumped.begin(), undumped.end(), s.name) != undumped.end()) continue;
    simcheck::vcd::SampledSignal sig{s.name, s.width, {}};
    for (std::size_t k = 0; k < cycles; ++k) {
      if (s.name == n.reset)
        sig.values.push_back(k < reset_cycles ? "1" : "0");
      else
        sig.values.push_back(bits(s.width));
    }
    run.signals.push_back(std::move(sig));
  }
  return run;
}

// ---------------------------------------------------------------------------
// ASCII AIGER evaluation

struct Aag {
  unsigned maxvar = 0, ni = 0, nl = 0, no = 0, na = 0;
  std::vector<unsigned> inputs;
  std::vector<std::pair<unsigned, unsigned>> latches;  // (lit, next)
  std::vector<unsigned> outputs;
  std::vector<std::array<unsigned, 3>> ands;
  std::vector<std::string> input_names, latch_names, output_names;

  /// Returns (outputs, next latch values) for one step.
  std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> step(const std::vector<std::uint8_t>& in,
                                                                       const std::vector<std::uint8_t>& state) const {
    std::vector<std::uint8_t> v(maxvar + 1, 0);
    for (std::size_t i = 0; i < inputs.size(); ++i) v[inputs[i] / 2] = in[i];
    for (std::size_t i = 0; i < latches.size(); ++i) v[latches[i].first / 2] = state[i];
    auto val = [&](unsigned lit) -> std::uint8_t { return v[lit / 2] ^ (lit & 1); };
    for (const auto& a : ands) v[a[0] / 2] = val(a[1]) & val(a[2]);
    std::vector<std::uint8_t> o, next;
    for (unsigned l : outputs) o.push_back(val(l));
    for (const auto& l : latches) next.push_back(val(l.second));
    return {o, next};
  }
};

inline Aag read_aag(std::istream& in) {
  Aag a;
  std::string magic;
  in >> magic >> a.maxvar >> a.ni >> a.nl >> a.no >> a.na;
  if (magic != "aag") throw std::runtime_error("not aag");
  for (unsigned i = 0; i < a.ni; ++i) {
    unsigned l;
    in >> l;
    a.inputs.push_back(l);
  }
  for (unsigned i = 0; i < a.nl; ++i) {
    unsigned l, n;
    in >> l >> n;
    a.latches.push_back({l, n});
  }
  for (unsigned i = 0; i < a.no; ++i) {
    unsigned l;
    in >> l;
    a.outputs.push_back(l);
  }
  for (unsigned i = 0; i < a.na; ++i) {
    unsigned x, y, z;
    in >> x >> y >> z;
    a.ands.push_back({x, y, z});
  }
  a.input_names.resize(a.ni);
  a.latch_names.resize(a.nl);
  a.output_names.resize(a.no);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') break;
    auto sp = line.find(' ');
    unsigned idx = static_cast<unsigned>(std::stoul(line.substr(1, sp - 1)));
    std::string name = line.substr(sp + 1);
    if (line[0] == 'i') a.input_names.at(idx) = name;
    if (line[0] == 'l') a.latch_names.at(idx) = name;
    if (line[0] == 'o') a.output_names.at(idx) = name;
  }
  return a;
}

}  // namespace testkit
