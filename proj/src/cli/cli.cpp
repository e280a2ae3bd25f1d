#include "simcheck/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "simcheck/aig/aiger.hpp"
#include "simcheck/aig/compile.hpp"
#include "simcheck/error.hpp"
#include "simcheck/verilog/elaborate.hpp"
#include "simcheck/verilog/parser.hpp"

namespace simcheck::cli {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
void write_file(const std::string& path, F&& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  body(out);
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

enum class Log { Quiet, Info, Debug };

Log log_level() {
  const char* v = std::getenv("SIMCHECK_LOG");
  if (!v) return Log::Info;
  std::string s = v;
  if (s == "quiet" || s == "0" || s == "error") return Log::Quiet;
  if (s == "debug" || s == "2" || s == "trace") return Log::Debug;
  return Log::Info;
}

std::string bits_of(const check::CexTrace& t, std::size_t frame, const std::string& base,
                    const verilog::Netlist& n) {
  const auto* sig = n.find_signal(base);
  std::string text;
  for (auto it = sig->bits.rbegin(); it != sig->bits.rend(); ++it) {
    const std::string& name = n.bits[*it].name;
    for (std::size_t i = 0; i < t.input_names.size(); ++i)
      if (t.input_names[i] == name) text += t.inputs[frame - t.start][i] ? '1' : '0';
  }
  return text;
}

}  // namespace

std::vector<TagLine> parse_tag_config(std::string_view text) {
  std::vector<TagLine> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::BadTag, "line " + std::to_string(line_no) + ": expected 'name = tag'");
    std::string name = trim(std::string_view(line).substr(0, eq));
    std::string tag = trim(std::string_view(line).substr(eq + 1));
    if (name.empty()) throw Error(ErrorCode::BadTag, "line " + std::to_string(line_no) + ": missing signal name");
    auto parsed = check::parse_tag(tag);
    if (!parsed)
      throw Error(ErrorCode::BadTag, "line " + std::to_string(line_no) + ": unknown tag '" + tag +
                                         "' (expected wave, rand, free or fail)");
    out.push_back({name, *parsed, line_no});
  }
  return out;
}

check::Tagging tagging_from_config(const verilog::Netlist& n, const std::vector<TagLine>& lines, std::uint64_t seed) {
  check::Tagging t;
  try {
    t = check::default_tagging(n);
  } catch (const Error& e) {
    // A config may name the fail signals itself.
    bool names_fail = std::any_of(lines.begin(), lines.end(), [](const TagLine& l) { return l.tag == check::SignalTag::Fail; });
    if (e.code() != ErrorCode::NoFailSignals || !names_fail) throw;
    for (const auto& s : n.signals)
      if (s.role == verilog::SignalRole::Input && s.name.find('.') == std::string::npos && s.name != n.clock)
        t.input_tags[s.name] = check::SignalTag::Wave;
  }
  for (const auto& l : lines) check::apply_override(t, n, l.name, l.tag);
  t.rand_seed = seed;
  return t;
}

int exit_code(check::Verdict v) {
  switch (v) {
    case check::Verdict::FailsFound: return kFailsFound;
    case check::Verdict::NoneInScope: return kNoneInScope;
    case check::Verdict::Incomplete: return kIncomplete;
  }
  return kInternalError;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ReplayMismatch:
    case ErrorCode::StrategyViolation:
    case ErrorCode::NoModel:
    case ErrorCode::UnallocatedVar:
    case ErrorCode::LengthMismatch:
      return kInternalError;
    default: return kUsageError;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bounded fail-signal checking of a Verilog design anchored on a simulation waveform", "simcheck"};
  app.add_option("verilog", cfg.verilog, "Verilog source files")->required()->check(CLI::ExistingFile);
  app.add_option("--top", cfg.top, "Top module")->required();
  app.add_option("--vcd", cfg.vcd, "Waveform that anchors the run")->check(CLI::ExistingFile);
  app.add_option("--tags", cfg.tags, "Tag config: one 'name = wave|rand|free|fail' per line")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", cfg.seed, "Seed for rand inputs and unbound free values")->capture_default_str();
  app.add_option("--max-frames", cfg.max_frames, "Maximum number of encoded frames");
  app.add_option("--max-conflicts", cfg.max_conflicts, "Total solver conflict budget (0 = unlimited)")
      ->capture_default_str();
  app.add_option("--clause-high-water", cfg.clause_high_water, "Active clauses above which free inputs get bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--window-min", cfg.window_min, "Window width needed before checking new fails")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--strategy", cfg.strategy, "Operation strategy")->capture_default_str();
  app.add_flag("--continue", cfg.continue_after_fail, "Keep checking after a fail is found");
  app.add_option("--cex-out", cfg.cex_out, "Counterexample VCD path")->capture_default_str();
  app.add_option("--report", cfg.report, "Write a JSON report here");
  app.add_option("--emit-aiger", cfg.emit_aiger, "Write the compiled design as ASCII AIGER");
  app.add_option("--emit-dimacs", cfg.emit_dimacs, "Write the final clause database as DIMACS");
  app.add_flag("--prep-only", cfg.prep_only, "Compile only; do not read a waveform or solve");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
    if (!cfg.prep_only && cfg.vcd.empty()) throw CLI::RequiredError("--vcd");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kNoneInScope;
  } catch (const CLI::ParseError& e) {
    err << "simcheck: error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const Log log = log_level();
  std::string current_file;
  try {
    std::vector<verilog::SourceModule> modules;
    for (const auto& path : cfg.verilog) {
      current_file = path;
      auto parsed = verilog::parse(read_file(path));
      for (auto& m : parsed) modules.push_back(std::move(m));
    }
    current_file.clear();
    auto design = std::make_shared<check::Design>();
    design->netlist = verilog::elaborate(modules, cfg.top);
    design->aig = aig::compile(design->netlist);
    const auto& g = design->aig;
    out << "design " << cfg.top << ": " << g.inputs().size() << " inputs, " << g.registers().size() << " registers, "
        << g.num_gates() << " gates\n";
    if (!cfg.emit_aiger.empty()) {
      write_file(cfg.emit_aiger, [&](std::ostream& o) { aig::write_aiger(g, o); });
      out << "aiger written to " << cfg.emit_aiger << "\n";
    }
    if (cfg.prep_only) return kNoneInScope;

    std::vector<TagLine> lines;
    if (!cfg.tags.empty()) lines = parse_tag_config(read_file(cfg.tags));
    check::Tagging tagging = tagging_from_config(design->netlist, lines, cfg.seed);

    std::ifstream vcd_in(cfg.vcd, std::ios::binary);
    if (!vcd_in) throw Error(ErrorCode::IoError, "cannot open '" + cfg.vcd + "'");
    vcd::Waveform wave = vcd::parse_vcd(vcd_in);
    if (design->netlist.clock.empty()) throw Error(ErrorCode::UnknownSignal, "the design has no clock");
    vcd::SampledRun run = vcd::sample_at_clock(wave, design->netlist.clock);

    check::EngineOptions eo;
    eo.max_frames = cfg.max_frames;
    eo.max_conflicts = cfg.max_conflicts;
    eo.continue_after_fail = cfg.continue_after_fail;
    check::CheckState state(design, tagging, run, eo);

    check::StrategyConfig sc;
    sc.clause_high_water = cfg.clause_high_water;
    sc.window_min = cfg.window_min;
    sc.seed = cfg.seed;
    auto strategy = check::make_strategy(cfg.strategy, sc);

    if (log != Log::Quiet) {
      for (const auto& w : wave.warnings) err << "simcheck: warning: " << w << "\n";
      for (const auto& w : run.warnings) err << "simcheck: warning: " << w << "\n";
    }
    out << "run: " << run.num_cycles() << " cycles, checking from cycle " << state.start() << ", strategy "
        << strategy->name() << "\n";

    check::Report rep = check::run_main_loop(state, *strategy);
    if (log != Log::Quiet)
      for (const auto& w : rep.warnings) err << "simcheck: warning: " << w << "\n";
    if (log == Log::Debug)
      for (const auto& op : rep.history)
        err << "simcheck: " << check::to_string(op.op) << " lo=" << op.lo << " hi=" << op.hi
            << " clauses=" << op.after.num_active_clauses << " " << op.outcome << "\n";

    for (const auto& t : rep.traces) {
      out << "fail " << t.fail_name << " raised at cycle " << t.fail_frame << "; free inputs unbound from cycle "
          << t.free_from << "\n";
      std::vector<std::string> free_signals;
      for (std::size_t i : t.free_inputs) {
        const auto& base = design->netlist.bits[design->netlist.data_inputs()[i]].base;
        if (std::find(free_signals.begin(), free_signals.end(), base) == free_signals.end())
          free_signals.push_back(base);
      }
      for (std::size_t f = t.start; f <= t.fail_frame; ++f) {
        out << "  cycle " << f << ":";
        for (const auto& s : free_signals) out << ' ' << s << '=' << bits_of(t, f, s, design->netlist);
        out << (f < t.free_from ? "  (bound)" : "") << "\n";
      }
    }
    if (!rep.traces.empty() && !cfg.cex_out.empty()) {
      vcd::SampledRun cex = check::trace_to_run(*design, rep.traces.front(), run);
      write_file(cfg.cex_out, [&](std::ostream& o) { vcd::write_vcd(cex, o); });
      out << "counterexample written to " << cfg.cex_out << "\n";
    }
    if (!cfg.emit_dimacs.empty())
      write_file(cfg.emit_dimacs, [&](std::ostream& o) { state.solver().write_dimacs(o); });
    if (!cfg.report.empty())
      write_file(cfg.report, [&](std::ostream& o) { o << check::to_json(rep, *design).dump(2) << "\n"; });
    out << check::summary_line(rep) << "\n";
    return exit_code(rep.verdict);
  } catch (const Error& e) {
    if (e.loc().valid())
      err << (current_file.empty() ? "<input>" : current_file) << ":" << e.loc().line << ":" << e.loc().col
          << ": error: " << e.what() << "\n";
    else
      err << "simcheck: error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "simcheck: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace simcheck::cli
