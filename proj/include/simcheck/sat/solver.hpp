#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

namespace simcheck::sat {

using Var = std::uint32_t;

/// Solver literal packed as `2 * var + negated`.
struct Lit {
  std::uint32_t x = 0;

  static constexpr Lit pos(Var v) { return Lit{v << 1}; }
  static constexpr Lit neg(Var v) { return Lit{(v << 1) | 1u}; }
  static constexpr Lit make(Var v, bool negated) { return Lit{(v << 1) | (negated ? 1u : 0u)}; }

  constexpr Var var() const { return x >> 1; }
  constexpr bool negated() const { return x & 1u; }
  constexpr Lit operator~() const { return Lit{x ^ 1u}; }
  constexpr Lit operator^(bool flip) const { return Lit{x ^ (flip ? 1u : 0u)}; }

  friend constexpr auto operator<=>(Lit, Lit) = default;
};

enum class SolveResult { Sat, Unsat, Unknown };
enum class AddResult { Ok, TriviallyTrue, ConflictAtRoot };

struct SolverStats {
  std::uint64_t num_vars = 0;
  std::uint64_t num_active_clauses = 0;  // problem clauses not satisfied at the root
  std::uint64_t num_root_units = 0;      // variables fixed at decision level 0
  std::uint64_t num_learned = 0;         // total learned clauses, including units
  std::uint64_t num_conflicts_total = 0;
  std::uint64_t num_solve_calls = 0;
  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

/// Minimal incremental SAT interface the check engine is written against.
/// Clauses are permanent. A root-level conflict latches the solver into a
/// permanently unsatisfiable state.
class Solver {
 public:
  virtual ~Solver() = default;

  virtual Var new_var() = 0;
  virtual std::uint32_t num_vars() const = 0;
  /// Throws Error(UnallocatedVar) for a literal over an unknown variable.
  virtual AddResult add_clause(std::span<const Lit> lits) = 0;
  virtual SolveResult solve(std::span<const Lit> assumptions) = 0;
  /// Value of `v` in the model of the last solve. Throws Error(NoModel)
  /// unless that solve returned Sat.
  virtual bool model_value(Var v) const = 0;
  virtual SolverStats stats() = 0;
  /// `p cnf` dump of the current problem clauses plus root units.
  virtual void write_dimacs(std::ostream& out) = 0;

  AddResult add_clause(std::initializer_list<Lit> lits) {
    return add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }
  SolveResult solve() { return solve(std::span<const Lit>{}); }
  SolveResult solve(std::initializer_list<Lit> assumptions) {
    return solve(std::span<const Lit>(assumptions.begin(), assumptions.size()));
  }
};

struct CdclOptions {
  std::uint64_t seed = 0;               // 0: purely activity-ordered branching
  std::uint64_t conflict_budget = 0;    // per solve call; 0 = unlimited
  int restart_base = 100;               // Luby unit, in conflicts
  bool reset_phases = false;            // forget saved polarities at each solve call
};

/// Conflict-driven clause learning with two watched literals, first-UIP
/// learning, VSIDS branching, Luby restarts and phase saving. Learned clauses
/// survive across solve calls. Problem clauses satisfied at the root are
/// removed as soon as the root trail grows.
class CdclSolver final : public Solver {
 public:
  explicit CdclSolver(CdclOptions opts = {});
  ~CdclSolver() override;
  CdclSolver(const CdclSolver&) = delete;
  CdclSolver& operator=(const CdclSolver&) = delete;

  Var new_var() override;
  std::uint32_t num_vars() const override;
  using Solver::add_clause;
  AddResult add_clause(std::span<const Lit> lits) override;
  using Solver::solve;
  SolveResult solve(std::span<const Lit> assumptions) override;
  bool model_value(Var v) const override;
  SolverStats stats() override;
  void write_dimacs(std::ostream& out) override;

  void set_conflict_budget(std::uint64_t budget);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace simcheck::sat
