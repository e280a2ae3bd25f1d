#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "simcheck/error.hpp"
#include "simcheck/sat/solver.hpp"

namespace simcheck::sat {

namespace {

using CRef = std::uint32_t;
constexpr CRef kNoReason = std::numeric_limits<CRef>::max();

constexpr std::uint8_t kFalse = 0;
constexpr std::uint8_t kTrue = 1;
constexpr std::uint8_t kUndef = 2;

struct Clause {
  std::vector<Lit> lits;
  bool learnt = false;
  bool removed = false;
  double activity = 0;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Max-heap of variables on activity; ties go to the lower index so that
// branching order is a function of the call history only.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}

  bool empty() const { return heap_.empty(); }
  bool contains(Var v) const { return v < pos_.size() && pos_[v] >= 0; }

  void insert(Var v) {
    if (pos_.size() <= v) pos_.resize(v + 1, -1);
    if (pos_[v] >= 0) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(heap_.size() - 1);
  }

  void increased(Var v) {
    if (contains(v)) up(static_cast<std::size_t>(pos_[v]));
  }

  Var pop() {
    Var top = heap_.front();
    heap_.front() = heap_.back();
    pos_[heap_.front()] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool before(Var a, Var b) const { return act_[a] > act_[b] || (act_[a] == act_[b] && a < b); }

  void up(std::size_t i) {
    Var v = heap_[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }

  void down(std::size_t i) {
    Var v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }

  const std::vector<double>& act_;
  std::vector<Var> heap_;
  std::vector<int> pos_;
};

enum class Search { Sat, Unsat, Restart, Budget };

}  // namespace

struct CdclSolver::Impl {
  CdclOptions opts;
  std::uint64_t rng;

  std::vector<Clause> clauses;
  std::vector<std::vector<Watcher>> watches;  // indexed by literal; clauses watching its negation
  std::vector<std::uint8_t> assigns;
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<std::uint8_t> phase;  // saved polarity: 1 = negated
  std::vector<double> activity;
  std::vector<std::uint8_t> seen;
  VarHeap heap{activity};

  std::vector<Lit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  double var_inc = 1;
  double cla_inc = 1;
  bool ok = true;

  std::vector<std::uint8_t> model;
  bool has_model = false;

  std::size_t simplified_trail = 0;
  std::size_t num_problem = 0;  // live problem clauses of size >= 2
  std::size_t num_learnts = 0;  // live learned clauses
  std::size_t num_removed = 0;
  double max_learnts = 0;

  std::uint64_t learned_total = 0;
  std::uint64_t conflicts_total = 0;
  std::uint64_t solve_calls = 0;
  std::uint64_t call_conflicts = 0;

  explicit Impl(CdclOptions o) : opts(o), rng(o.seed) {}

  std::uint8_t value(Lit p) const {
    std::uint8_t a = assigns[p.var()];
    return a == kUndef ? kUndef : static_cast<std::uint8_t>(a ^ (p.negated() ? 1u : 0u));
  }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  void check_var(Var v) const {
    if (v >= assigns.size())
      throw Error(ErrorCode::UnallocatedVar, "variable " + std::to_string(v) + " was never allocated");
  }

  Var new_var() {
    Var v = static_cast<Var>(assigns.size());
    assigns.push_back(kUndef);
    level.push_back(0);
    reason.push_back(kNoReason);
    phase.push_back(1);
    activity.push_back(opts.seed ? static_cast<double>(splitmix(rng) >> 11) * 0x1.0p-53 * 1e-5 : 0.0);
    seen.push_back(0);
    watches.emplace_back();
    watches.emplace_back();
    heap.insert(v);
    return v;
  }

  void enqueue(Lit p, CRef from) {
    assigns[p.var()] = p.negated() ? kFalse : kTrue;
    level[p.var()] = decision_level();
    reason[p.var()] = from;
    trail.push_back(p);
  }

  void attach(CRef cr) {
    const Clause& c = clauses[cr];
    watches[(~c.lits[0]).x].push_back({cr, c.lits[1]});
    watches[(~c.lits[1]).x].push_back({cr, c.lits[0]});
  }

  CRef propagate() {
    CRef confl = kNoReason;
    while (qhead < trail.size()) {
      Lit p = trail[qhead++];
      Lit false_lit = ~p;
      std::vector<Watcher>& ws = watches[p.x];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        Lit blocker = ws[i].blocker;
        if (value(blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        CRef cr = ws[i].cref;
        Clause& c = clauses[cr];
        ++i;
        if (c.removed) continue;
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        Lit first = c.lits[0];
        Watcher w{cr, first};
        if (first != blocker && value(first) == kTrue) {
          ws[j++] = w;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) != kFalse) {
            std::swap(c.lits[1], c.lits[k]);
            watches[(~c.lits[1]).x].push_back(w);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = w;
        if (value(first) == kFalse) {
          confl = cr;
          qhead = trail.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, cr);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t c = trail.size(); c-- > trail_lim[static_cast<std::size_t>(lvl)];) {
      Var v = trail[c].var();
      assigns[v] = kUndef;
      reason[v] = kNoReason;
      phase[v] = trail[c].negated() ? 1 : 0;
      heap.insert(v);
    }
    qhead = trail_lim[static_cast<std::size_t>(lvl)];
    trail.resize(qhead);
    trail_lim.resize(static_cast<std::size_t>(lvl));
  }

  void bump_var(Var v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    heap.increased(v);
  }

  void bump_clause(Clause& c) {
    if ((c.activity += cla_inc) > 1e20) {
      for (Clause& d : clauses)
        if (d.learnt) d.activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  bool redundant(Lit q) const {
    CRef r = reason[q.var()];
    if (r == kNoReason) return false;
    const Clause& c = clauses[r];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
      Var u = c.lits[k].var();
      if (!seen[u] && level[u] > 0) return false;
    }
    return true;
  }

  void analyze(CRef confl, std::vector<Lit>& learnt, int& bt_level) {
    learnt.clear();
    learnt.push_back(Lit{});
    int path = 0;
    bool have_p = false;
    Lit p{};
    std::size_t index = trail.size();
    do {
      Clause& c = clauses[confl];
      if (c.learnt) bump_clause(c);
      for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
        Lit q = c.lits[k];
        Var v = q.var();
        if (!seen[v] && level[v] > 0) {
          bump_var(v);
          seen[v] = 1;
          if (level[v] >= decision_level())
            ++path;
          else
            learnt.push_back(q);
        }
      }
      while (!seen[trail[--index].var()]) {
      }
      p = trail[index];
      have_p = true;
      confl = reason[p.var()];
      seen[p.var()] = 0;
      --path;
    } while (path > 0);
    learnt[0] = ~p;

    std::vector<Lit> all(learnt.begin(), learnt.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i)
      if (!redundant(learnt[i])) learnt[j++] = learnt[i];
    learnt.resize(j);
    for (Lit q : all) seen[q.var()] = 0;

    bt_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level[learnt[i].var()] > level[learnt[max_i].var()]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level[learnt[1].var()];
    }
  }

  bool locked(CRef cr) const {
    const Clause& c = clauses[cr];
    return reason[c.lits[0].var()] == cr && value(c.lits[0]) == kTrue;
  }

  void remove(CRef cr) {
    Clause& c = clauses[cr];
    if (c.removed) return;
    c.removed = true;
    ++num_removed;
    if (c.learnt)
      --num_learnts;
    else
      --num_problem;
  }

  // Drops removed clauses from storage and rebuilds the watch lists,
  // renumbering the reasons of assigned variables.
  void compact() {
    std::vector<CRef> remap(clauses.size(), kNoReason);
    std::vector<Clause> kept;
    kept.reserve(clauses.size() - num_removed);
    for (CRef cr = 0; cr < clauses.size(); ++cr) {
      if (clauses[cr].removed) continue;
      remap[cr] = static_cast<CRef>(kept.size());
      kept.push_back(std::move(clauses[cr]));
    }
    clauses = std::move(kept);
    for (Lit p : trail)
      if (reason[p.var()] != kNoReason) reason[p.var()] = remap[reason[p.var()]];
    for (auto& ws : watches) ws.clear();
    for (CRef cr = 0; cr < clauses.size(); ++cr) attach(cr);
    num_removed = 0;
  }

  void reduce_db() {
    std::vector<CRef> cands;
    for (CRef cr = 0; cr < clauses.size(); ++cr) {
      const Clause& c = clauses[cr];
      if (c.learnt && !c.removed && c.lits.size() > 2 && !locked(cr)) cands.push_back(cr);
    }
    std::sort(cands.begin(), cands.end(), [&](CRef a, CRef b) {
      return clauses[a].activity < clauses[b].activity || (clauses[a].activity == clauses[b].activity && a < b);
    });
    for (std::size_t i = 0; i < cands.size() / 2; ++i) remove(cands[i]);
    compact();
    max_learnts *= 1.1;
  }

  // Root-level simplification: removes every clause satisfied by a root
  // assignment. Only runs when the root trail has grown.
  void simplify() {
    if (!ok || decision_level() != 0) return;
    if (propagate() != kNoReason) {
      ok = false;
      return;
    }
    if (trail.size() == simplified_trail) return;
    for (Lit p : trail) reason[p.var()] = kNoReason;
    // With propagation complete, a clause that is not satisfied has at least
    // two unassigned literals; dropping its false literals keeps both
    // watches on unassigned literals.
    for (CRef cr = 0; cr < clauses.size(); ++cr) {
      Clause& c = clauses[cr];
      if (c.removed) continue;
      bool sat = std::any_of(c.lits.begin(), c.lits.end(), [&](Lit q) { return value(q) == kTrue; });
      if (sat) {
        remove(cr);
        continue;
      }
      std::erase_if(c.lits, [&](Lit q) { return value(q) == kFalse; });
    }
    compact();
    simplified_trail = trail.size();
  }

  AddResult add_clause(std::span<const Lit> in) {
    for (Lit p : in) check_var(p.var());
    if (!ok) return AddResult::ConflictAtRoot;
    std::vector<Lit> lits(in.begin(), in.end());
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::size_t j = 0;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == ~lits[i]) return AddResult::TriviallyTrue;
      std::uint8_t v = value(lits[i]);
      if (v == kTrue) return AddResult::TriviallyTrue;
      if (v == kUndef) lits[j++] = lits[i];
    }
    lits.resize(j);
    if (lits.empty()) {
      ok = false;
      return AddResult::ConflictAtRoot;
    }
    if (lits.size() == 1) {
      enqueue(lits[0], kNoReason);
      if (propagate() != kNoReason) {
        ok = false;
        return AddResult::ConflictAtRoot;
      }
      return AddResult::Ok;
    }
    clauses.push_back(Clause{std::move(lits), false, false, 0});
    ++num_problem;
    attach(static_cast<CRef>(clauses.size() - 1));
    return AddResult::Ok;
  }

  Search search(std::span<const Lit> assumptions, double max_conflicts) {
    std::uint64_t conflicts = 0;
    std::vector<Lit> learnt;
    for (;;) {
      CRef confl = propagate();
      if (confl != kNoReason) {
        ++conflicts;
        ++conflicts_total;
        ++call_conflicts;
        if (decision_level() == 0) {
          ok = false;
          return Search::Unsat;
        }
        int bt_level = 0;
        analyze(confl, learnt, bt_level);
        cancel_until(bt_level);
        ++learned_total;
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          clauses.push_back(Clause{learnt, true, false, 0});
          CRef cr = static_cast<CRef>(clauses.size() - 1);
          ++num_learnts;
          attach(cr);
          bump_clause(clauses[cr]);
          enqueue(learnt[0], cr);
        }
        var_inc /= 0.95;
        cla_inc /= 0.999;
        continue;
      }
      if (opts.conflict_budget && call_conflicts >= opts.conflict_budget) return Search::Budget;
      if (static_cast<double>(conflicts) >= max_conflicts) {
        cancel_until(0);
        return Search::Restart;
      }
      if (static_cast<double>(num_learnts) - static_cast<double>(trail.size()) >= max_learnts) reduce_db();

      bool have_next = false;
      Lit next{};
      while (decision_level() < static_cast<int>(assumptions.size())) {
        Lit a = assumptions[static_cast<std::size_t>(decision_level())];
        std::uint8_t v = value(a);
        if (v == kTrue) {
          trail_lim.push_back(trail.size());
        } else if (v == kFalse) {
          return Search::Unsat;
        } else {
          next = a;
          have_next = true;
          break;
        }
      }
      if (!have_next) {
        while (!heap.empty()) {
          Var v = heap.pop();
          if (assigns[v] == kUndef) {
            next = Lit::make(v, phase[v] != 0);
            have_next = true;
            break;
          }
        }
        if (!have_next) return Search::Sat;
      }
      trail_lim.push_back(trail.size());
      enqueue(next, kNoReason);
    }
  }

  SolveResult solve(std::span<const Lit> assumptions) {
    for (Lit p : assumptions) check_var(p.var());
    ++solve_calls;
    has_model = false;
    call_conflicts = 0;
    if (!ok) return SolveResult::Unsat;
    simplify();
    if (!ok) return SolveResult::Unsat;
    max_learnts = std::max(2000.0, static_cast<double>(num_problem) / 3.0);
    if (opts.reset_phases) std::fill(phase.begin(), phase.end(), 1);

    SolveResult result = SolveResult::Unknown;
    for (int restart = 0;; ++restart) {
      double budget = luby(2, restart) * opts.restart_base;
      Search s = search(assumptions, budget);
      if (s == Search::Restart) continue;
      if (s == Search::Sat) {
        model = assigns;
        has_model = true;
        result = SolveResult::Sat;
      } else if (s == Search::Unsat) {
        result = SolveResult::Unsat;
      }
      break;
    }
    cancel_until(0);
    return result;
  }
};

CdclSolver::CdclSolver(CdclOptions opts) : impl_(std::make_unique<Impl>(opts)) {}
CdclSolver::~CdclSolver() = default;

Var CdclSolver::new_var() { return impl_->new_var(); }
std::uint32_t CdclSolver::num_vars() const { return static_cast<std::uint32_t>(impl_->assigns.size()); }
AddResult CdclSolver::add_clause(std::span<const Lit> lits) { return impl_->add_clause(lits); }
SolveResult CdclSolver::solve(std::span<const Lit> assumptions) { return impl_->solve(assumptions); }
void CdclSolver::set_conflict_budget(std::uint64_t budget) { impl_->opts.conflict_budget = budget; }

bool CdclSolver::model_value(Var v) const {
  impl_->check_var(v);
  if (!impl_->has_model) throw Error(ErrorCode::NoModel, "no model: the last solve did not return Sat");
  // Variables created after the last solve are unconstrained in its model.
  return v < impl_->model.size() && impl_->model[v] == kTrue;
}

SolverStats CdclSolver::stats() {
  impl_->simplify();
  SolverStats s;
  s.num_vars = impl_->assigns.size();
  s.num_active_clauses = impl_->num_problem;
  s.num_root_units = impl_->decision_level() == 0 ? impl_->trail.size() : impl_->trail_lim[0];
  s.num_learned = impl_->learned_total;
  s.num_conflicts_total = impl_->conflicts_total;
  s.num_solve_calls = impl_->solve_calls;
  return s;
}

void CdclSolver::write_dimacs(std::ostream& out) {
  impl_->simplify();
  const Impl& m = *impl_;
  auto dimacs = [](Lit p) { return p.negated() ? -static_cast<long long>(p.var() + 1) : static_cast<long long>(p.var() + 1); };
  std::size_t count = m.ok ? m.trail.size() + m.num_problem : 1;
  out << "p cnf " << m.assigns.size() << ' ' << count << '\n';
  if (!m.ok) {
    out << "0\n";
    return;
  }
  for (Lit p : m.trail) out << dimacs(p) << " 0\n";
  for (const Clause& c : m.clauses) {
    if (c.learnt || c.removed) continue;
    for (Lit p : c.lits) out << dimacs(p) << ' ';
    out << "0\n";
  }
}

}  // namespace simcheck::sat
