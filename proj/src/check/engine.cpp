#include "simcheck/check/engine.hpp"

#include <algorithm>
#include <optional>

#include "simcheck/aig/compile.hpp"
#include "simcheck/error.hpp"
#include "simcheck/sim/sim.hpp"
#include "simcheck/verilog/elaborate.hpp"
#include "simcheck/verilog/parser.hpp"

namespace simcheck::check {

using aig::AigLit;
using aig::NodeKind;
using sat::Lit;

namespace {

// Encoded values: 0 and 1 are constants, e >= 2 is solver literal e - 2.
// Negation is e ^ 1 in both cases.
Lit to_lit(std::int64_t e) { return Lit{static_cast<std::uint32_t>(e - 2)}; }
std::int64_t from_lit(Lit l) { return static_cast<std::int64_t>(l.x) + 2; }

}  // namespace

std::shared_ptr<const Design> build_design(std::string_view source, const std::string& top) {
  auto modules = verilog::parse(source);
  auto d = std::make_shared<Design>();
  d->netlist = verilog::elaborate(modules, top);
  d->aig = aig::compile(d->netlist);
  return d;
}

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::StepFail: return "step_fail";
    case OpKind::StepFree: return "step_free";
    case OpKind::CheckFails: return "check_fails";
    case OpKind::Done: return "done";
  }
  return "?";
}

std::string_view to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::FailsFound: return "fails_found";
    case CheckVerdict::NoneInScope: return "none_in_scope";
    case CheckVerdict::Unknown: return "unknown";
  }
  return "?";
}

std::vector<std::uint8_t> CexTrace::free_values(std::size_t frame) const {
  std::vector<std::uint8_t> out;
  const auto& row = inputs.at(frame - start);
  for (std::size_t i : free_inputs) out.push_back(row[i]);
  return out;
}

CheckState::CheckState(std::shared_ptr<const Design> design, Tagging tagging, vcd::SampledRun run,
                       EngineOptions opts, std::unique_ptr<sat::Solver> solver)
    : design_(std::move(design)), tagging_(std::move(tagging)), run_(std::move(run)), opts_(opts),
      solver_(std::move(solver)) {
  if (!solver_) solver_ = std::make_unique<sat::CdclSolver>(opts_.solver);
  const auto& n = design_->netlist;
  stim_ = std::make_unique<Stimulus>(n, tagging_, run_);
  warnings_ = stim_->warnings();

  for (const auto& name : tagging_.fail_signals) {
    const AigLit* l = design_->aig.find(name);
    if (!l) throw Error(ErrorCode::UnknownSignal, "fail signal '" + name + "' is not in the design");
    fail_lits_.push_back(*l);
  }

  start_ = 0;
  if (!n.reset.empty()) {
    const auto* sig = n.find_signal(n.reset);
    if (!run_.find(n.reset))
      throw Error(ErrorCode::MissingWaveSignal, "reset '" + n.reset + "' is not in the waveform");
    std::size_t c = 0;
    for (; c < run_.num_cycles(); ++c)
      if (sampled_bit(n, sig->bits[0], run_, c) == '0') break;
    if (c == run_.num_cycles())
      throw Error(ErrorCode::ResetNeverDeasserts, "reset '" + n.reset + "' is never sampled 0");
    start_ = c;
  } else if (run_.num_cycles() == 0) {
    throw Error(ErrorCode::ResetNeverDeasserts, "the waveform has no clock cycles");
  }
  lo_ = start_;
  hi_ = start_ - 1;
  init_ = sample_flops(n, run_, start_, warnings_);
}

CheckState::~CheckState() = default;

std::size_t CheckState::num_pending() const {
  return static_cast<std::size_t>(
      std::count_if(fails_.begin(), fails_.end(), [](const MonitoredFail& f) { return f.status == FailStatus::Pending; }));
}

std::vector<std::int64_t>& CheckState::frame_row(std::size_t frame) {
  auto it = frames_.find(frame);
  if (it == frames_.end()) it = frames_.emplace(frame, std::vector<std::int64_t>(design_->aig.num_nodes(), kUnset)).first;
  return it->second;
}

void CheckState::add(std::initializer_list<Lit> lits) {
  solver_->add_clause(lits);
  ++clauses_added_;
}

std::int64_t CheckState::lit_value(AigLit l, std::size_t frame) {
  return encode(l.node(), frame) ^ (l.negated() ? 1 : 0);
}

// Encodes `root` at `frame`, first encoding whatever it depends on: fanins
// at the same frame, and for a register the next-state function one frame
// earlier. Only the cone of the root is visited.
std::int64_t CheckState::encode(std::uint32_t root, std::size_t frame) {
  const aig::Aig& g = design_->aig;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, frame}};
  while (!stack.empty()) {
    auto [id, f] = stack.back();
    auto& row = frame_row(f);
    if (row[id] != kUnset) {
      stack.pop_back();
      continue;
    }
    const aig::Node& node = g.node(id);
    std::int64_t value = kUnset;
    switch (node.kind) {
      case NodeKind::ConstFalse: value = kConstFalse; break;
      case NodeKind::Input: {
        std::size_t i = node.index;
        if (stim_->tag(i) != SignalTag::Free) {
          value = stim_->fixed_value(i, f) ? kConstTrue : kConstFalse;
        } else if (f < lo_) {
          value = stim_->bound_value(i, f) ? kConstTrue : kConstFalse;
        } else {
          auto [it, fresh] = free_vars_.try_emplace({f, i}, 0);
          if (fresh) it->second = solver_->new_var();
          value = from_lit(Lit::pos(it->second));
        }
        break;
      }
      case NodeKind::Reg: {
        if (f == start_) {
          value = init_[node.index] ? kConstTrue : kConstFalse;
          break;
        }
        AigLit next = g.registers()[node.index].next;
        std::int64_t prev = frame_row(f - 1)[next.node()];
        if (prev == kUnset) {
          stack.emplace_back(next.node(), f - 1);
          continue;
        }
        value = prev ^ (next.negated() ? 1 : 0);
        break;
      }
      case NodeKind::And:
      case NodeKind::Xor: {
        std::int64_t ea = row[node.a.node()];
        std::int64_t eb = row[node.b.node()];
        if (ea == kUnset || eb == kUnset) {
          if (ea == kUnset) stack.emplace_back(node.a.node(), f);
          if (eb == kUnset) stack.emplace_back(node.b.node(), f);
          continue;
        }
        ea ^= node.a.negated() ? 1 : 0;
        eb ^= node.b.negated() ? 1 : 0;
        if (node.kind == NodeKind::And) {
          if (ea == kConstFalse || eb == kConstFalse || ea == (eb ^ 1)) {
            value = kConstFalse;
          } else if (ea == kConstTrue || ea == eb) {
            value = eb;
          } else if (eb == kConstTrue) {
            value = ea;
          } else {
            Lit v = Lit::pos(solver_->new_var());
            Lit a = to_lit(ea), b = to_lit(eb);
            add({~v, a});
            add({~v, b});
            add({v, ~a, ~b});
            value = from_lit(v);
          }
        } else {
          if (ea < 2 && eb < 2) {
            value = ea ^ eb;
          } else if (ea < 2) {
            value = eb ^ ea;
          } else if (eb < 2) {
            value = ea ^ eb;
          } else if (ea == eb) {
            value = kConstFalse;
          } else if (ea == (eb ^ 1)) {
            value = kConstTrue;
          } else {
            Lit v = Lit::pos(solver_->new_var());
            Lit a = to_lit(ea), b = to_lit(eb);
            add({~v, a, b});
            add({~v, ~a, ~b});
            add({v, ~a, b});
            add({v, a, ~b});
            value = from_lit(v);
          }
        }
        break;
      }
    }
    // frame_row may have inserted a new frame, but std::map keeps `row` valid.
    row[id] = value;
    stack.pop_back();
  }
  return frame_row(frame)[root];
}

OpRecord CheckState::begin(OpKind op) {
  OpRecord r;
  r.op = op;
  r.before = solver_->stats();
  r.clauses_added = clauses_added_;
  return r;
}

void CheckState::finish(OpRecord& r, std::string outcome) {
  r.after = solver_->stats();
  r.clauses_added = clauses_added_ - r.clauses_added;
  r.lo = lo_;
  r.hi = hi_;
  r.outcome = std::move(outcome);
  history_.push_back(std::move(r));
}

void CheckState::step_fail() {
  if (!can_step_fail()) {
    if (hi_ + 1 >= run_.num_cycles())
      throw Error(ErrorCode::BudgetExhausted, "no cycle " + std::to_string(hi_ + 1) + " in the waveform");
    throw Error(ErrorCode::BudgetExhausted, "frame limit of " + std::to_string(opts_.max_frames) + " reached");
  }
  OpRecord r = begin(OpKind::StepFail);
  ++hi_;
  std::size_t constant = 0;
  for (std::size_t k = 0; k < fail_lits_.size(); ++k) {
    std::int64_t e = lit_value(fail_lits_[k], hi_);
    MonitoredFail f{tagging_.fail_signals[k], hi_, e, FailStatus::Pending};
    if (e == kConstFalse) {
      f.status = FailStatus::TriviallyFalse;
      ++constant;
    } else {
      unchecked_ = true;
    }
    fails_.push_back(std::move(f));
  }
  finish(r, "frame " + std::to_string(hi_) + (constant == fail_lits_.size() ? " (constant 0)" : ""));
}

void CheckState::step_free() {
  if (!can_step_free())
    throw Error(ErrorCode::NothingToBind, "no unbound frame: lo=" + std::to_string(lo_) + " hi=" + std::to_string(hi_));
  OpRecord r = begin(OpKind::StepFree);
  std::size_t bound = 0;
  for (std::size_t i : stim_->free_inputs()) {
    auto it = free_vars_.find({lo_, i});
    if (it == free_vars_.end()) continue;
    add({Lit::make(it->second, !stim_->bound_value(i, lo_))});
    ++bound;
  }
  ++lo_;
  finish(r, "frame " + std::to_string(lo_ - 1) + " bound " + std::to_string(bound) + " var(s)");
}

CheckResult CheckState::check_fails() {
  if (fails_.empty()) throw Error(ErrorCode::NoMonitoredFails, "no fail has been encoded yet");
  unchecked_ = false;
  OpRecord r = begin(OpKind::CheckFails);
  CheckResult result;

  std::vector<std::size_t> pending;
  bool const_true = false;
  for (std::size_t k = 0; k < fails_.size(); ++k) {
    if (fails_[k].status != FailStatus::Pending) continue;
    pending.push_back(k);
    const_true = const_true || fails_[k].enc == kConstTrue;
  }
  if (pending.empty()) {
    finish(r, "none_in_scope (nothing pending)");
    return result;
  }

  if (opts_.max_conflicts) {
    auto* cdcl = dynamic_cast<sat::CdclSolver*>(solver_.get());
    std::uint64_t used = r.before.num_conflicts_total;
    if (cdcl) cdcl->set_conflict_budget(used >= opts_.max_conflicts ? 1 : opts_.max_conflicts - used);
  }

  // The activation literal scopes this check's disjunction so that it can be
  // retired afterwards with a unit clause.
  std::optional<Lit> act;
  sat::SolveResult res;
  result.solver_called = true;
  if (const_true) {
    res = solver_->solve();
  } else {
    act = Lit::pos(solver_->new_var());
    std::vector<Lit> clause{~*act};
    for (std::size_t k : pending) clause.push_back(to_lit(fails_[k].enc));
    solver_->add_clause(clause);
    ++clauses_added_;
    res = solver_->solve({*act});
  }

  std::string outcome;
  if (res == sat::SolveResult::Sat) {
    std::vector<std::size_t> found;
    for (std::size_t k : pending) {
      const auto& f = fails_[k];
      bool raised = f.enc == kConstTrue || (f.enc >= 2 && solver_->model_value(to_lit(f.enc).var()) != to_lit(f.enc).negated());
      if (!raised) continue;
      CexTrace t = extract(f);
      if (!replays(t))
        throw Error(ErrorCode::ReplayMismatch, "counterexample for " + f.name + " at frame " +
                                                   std::to_string(f.frame) + " does not replay in simulation");
      result.traces.push_back(std::move(t));
      found.push_back(k);
    }
    for (std::size_t k : found) fails_[k].status = FailStatus::Found;
    if (act) add({~*act});
    if (opts_.continue_after_fail)
      for (std::size_t k : found)
        if (fails_[k].enc >= 2) add({~to_lit(fails_[k].enc)});
    result.verdict = CheckVerdict::FailsFound;
    outcome = "fails_found " + std::to_string(found.size());
  } else if (res == sat::SolveResult::Unsat) {
    if (act) add({~*act});
    for (std::size_t k : pending) fails_[k].status = FailStatus::Discharged;
    result.verdict = CheckVerdict::NoneInScope;
    outcome = "none_in_scope " + std::to_string(pending.size());
  } else {
    if (act) add({~*act});
    for (std::size_t k : pending) fails_[k].status = FailStatus::Inconclusive;
    result.verdict = CheckVerdict::Unknown;
    outcome = "unknown (conflict budget)";
  }
  finish(r, outcome);
  return result;
}

CexTrace CheckState::extract(const MonitoredFail& f) {
  CexTrace t;
  t.fail_name = f.name;
  t.fail_frame = f.frame;
  t.start = start_;
  t.free_from = lo_;
  t.initial_state = init_;
  for (std::size_t i = 0; i < stim_->num_inputs(); ++i) t.input_names.push_back(stim_->name(i));
  t.free_inputs = stim_->free_inputs();
  for (std::size_t frame = start_; frame <= f.frame; ++frame) {
    std::vector<std::uint8_t> row(stim_->num_inputs(), 0);
    for (std::size_t i = 0; i < stim_->num_inputs(); ++i) {
      if (stim_->tag(i) != SignalTag::Free) {
        row[i] = stim_->fixed_value(i, frame);
        continue;
      }
      auto it = corrupt_ ? free_vars_.end() : free_vars_.find({frame, i});
      if (it != free_vars_.end())
        row[i] = solver_->model_value(it->second);
      else if (frame < lo_)
        row[i] = stim_->bound_value(i, frame);
      // Otherwise unconstrained by every encoded fail: reported as 0.
    }
    t.inputs.push_back(std::move(row));
  }
  return t;
}

bool CheckState::replays(const CexTrace& t) const {
  const auto& n = design_->netlist;
  sim::SimState init{t.initial_state, t.start};
  auto values = sim::replay(n, init, t.inputs);
  if (t.fail_frame < t.start || t.fail_frame - t.start >= values.size()) return false;
  return sim::bit_value(n, values[t.fail_frame - t.start], t.fail_name);
}

vcd::SampledRun trace_to_run(const Design& d, const CexTrace& t, const vcd::SampledRun& original) {
  const auto& n = d.netlist;
  auto values = sim::replay(n, sim::SimState{t.initial_state, t.start}, t.inputs);
  vcd::SampledRun out;
  out.clock_name = n.clock.empty() ? "clk" : n.clock;
  for (std::size_t k = 0; k < values.size(); ++k) out.cycle_times.push_back(original.cycle_times.at(t.start + k));
  for (const auto& s : n.signals) {
    if (s.name == n.clock) continue;
    vcd::SampledSignal sig;
    sig.name = s.name;
    sig.width = s.width;
    for (const auto& v : values) {
      vcd::Value text;
      for (auto it = s.bits.rbegin(); it != s.bits.rend(); ++it) text += v[*it] ? '1' : '0';
      sig.values.push_back(std::move(text));
    }
    out.signals.push_back(std::move(sig));
  }
  return out;
}

}  // namespace simcheck::check
