#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "simcheck/error.hpp"
#include "simcheck/sat/solver.hpp"

using namespace simcheck;
using namespace simcheck::sat;

namespace {

using Cnf = std::vector<std::vector<Lit>>;

Cnf random_3cnf(std::mt19937_64& rng, int vars, int clauses) {
  Cnf cnf;
  std::uniform_int_distribution<int> var(0, vars - 1);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < clauses; ++i) {
    std::vector<Lit> c;
    for (int k = 0; k < 3; ++k) c.push_back(Lit::make(static_cast<Var>(var(rng)), sign(rng)));
    cnf.push_back(c);
  }
  return cnf;
}

bool satisfies(const Cnf& cnf, std::uint32_t assignment, std::span<const Lit> assumptions = {}) {
  auto val = [&](Lit p) { return (((assignment >> p.var()) & 1u) != 0) != p.negated(); };
  for (Lit a : assumptions)
    if (!val(a)) return false;
  for (const auto& c : cnf)
    if (std::none_of(c.begin(), c.end(), val)) return false;
  return true;
}

bool enumerate(const Cnf& cnf, int vars, std::span<const Lit> assumptions = {}) {
  for (std::uint32_t a = 0; a < (1u << vars); ++a)
    if (satisfies(cnf, a, assumptions)) return true;
  return false;
}

std::uint32_t model_bits(const Solver& s, int vars) {
  std::uint32_t m = 0;
  for (int v = 0; v < vars; ++v)
    if (s.model_value(static_cast<Var>(v))) m |= 1u << v;
  return m;
}

}  // namespace

TEST(Sat, FreshStatsAreZero) {
  CdclSolver s;
  EXPECT_EQ(s.stats(), SolverStats{});
}

TEST(Sat, TautologyIsTriviallyTrue) {
  CdclSolver s;
  Var x = s.new_var();
  EXPECT_EQ(s.add_clause({Lit::pos(x), Lit::neg(x)}), AddResult::TriviallyTrue);
  EXPECT_EQ(s.stats().num_active_clauses, 0u);
}

TEST(Sat, UnitSimplifiesLaterClause) {
  CdclSolver s;
  Var x = s.new_var(), y = s.new_var();
  EXPECT_EQ(s.add_clause({Lit::pos(x)}), AddResult::Ok);
  s.add_clause({Lit::neg(x), Lit::pos(y)});
  auto st = s.stats();
  EXPECT_EQ(st.num_active_clauses, 0u);
  EXPECT_EQ(st.num_root_units, 2u);
}

TEST(Sat, UnitRemovesSatisfiedClause) {
  CdclSolver s;
  Var a = s.new_var(), b = s.new_var();
  s.add_clause({Lit::pos(a), Lit::pos(b)});
  EXPECT_EQ(s.stats().num_active_clauses, 1u);
  s.add_clause({Lit::pos(a)});
  EXPECT_EQ(s.stats().num_active_clauses, 0u);
}

TEST(Sat, ContradictoryUnitsLatch) {
  CdclSolver s;
  Var x = s.new_var();
  s.add_clause({Lit::pos(x)});
  EXPECT_EQ(s.add_clause({Lit::neg(x)}), AddResult::ConflictAtRoot);
  EXPECT_EQ(s.solve(), SolveResult::Unsat);
  Var y = s.new_var();
  EXPECT_EQ(s.add_clause({Lit::pos(y)}), AddResult::ConflictAtRoot);
}

TEST(Sat, SingleUnitModel) {
  CdclSolver s;
  Var x = s.new_var();
  s.add_clause({Lit::pos(x)});
  ASSERT_EQ(s.solve(), SolveResult::Sat);
  EXPECT_TRUE(s.model_value(x));
}

TEST(Sat, TwoVarExhaustion) {
  CdclSolver s;
  Var a = s.new_var(), b = s.new_var();
  s.add_clause({Lit::pos(a), Lit::pos(b)});
  s.add_clause({Lit::neg(a), Lit::pos(b)});
  s.add_clause({Lit::pos(a), Lit::neg(b)});
  s.add_clause({Lit::neg(a), Lit::neg(b)});
  EXPECT_EQ(s.solve(), SolveResult::Unsat);
  EXPECT_THROW(s.model_value(a), Error);
}

TEST(Sat, AssumptionsAreRetractable) {
  CdclSolver s;
  Var a = s.new_var(), b = s.new_var();
  s.add_clause({Lit::pos(a), Lit::pos(b)});
  EXPECT_EQ(s.solve({Lit::neg(a), Lit::neg(b)}), SolveResult::Unsat);
  ASSERT_EQ(s.solve({Lit::neg(a)}), SolveResult::Sat);
  EXPECT_TRUE(s.model_value(b));
  EXPECT_FALSE(s.model_value(a));
}

TEST(Sat, UnconstrainedVarHasAValue) {
  CdclSolver s;
  Var a = s.new_var();
  Var free_var = s.new_var();
  s.add_clause({Lit::pos(a)});
  ASSERT_EQ(s.solve(), SolveResult::Sat);
  EXPECT_NO_THROW(s.model_value(free_var));
}

TEST(Sat, UnallocatedVarRejected) {
  CdclSolver s;
  s.new_var();
  EXPECT_THROW(s.add_clause({Lit::pos(5)}), Error);
  EXPECT_THROW(s.solve({Lit::pos(7)}), Error);
  try {
    s.add_clause({Lit::pos(3)});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnallocatedVar);
  }
}

TEST(Sat, BudgetGivesUnknown) {
  // Pigeonhole 8 into 7 needs many conflicts.
  CdclSolver s;
  const int p = 8, h = 7;
  auto v = [&](int i, int j) { return static_cast<Var>(i * h + j); };
  for (int i = 0; i < p * h; ++i) s.new_var();
  for (int i = 0; i < p; ++i) {
    std::vector<Lit> c;
    for (int j = 0; j < h; ++j) c.push_back(Lit::pos(v(i, j)));
    s.add_clause(c);
  }
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < p; ++i)
      for (int k = i + 1; k < p; ++k) s.add_clause({Lit::neg(v(i, j)), Lit::neg(v(k, j))});
  s.set_conflict_budget(10);
  EXPECT_EQ(s.solve(), SolveResult::Unknown);
  EXPECT_GE(s.stats().num_conflicts_total, 10u);
}

TEST(Sat, DimacsDump) {
  CdclSolver s;
  Var a = s.new_var(), b = s.new_var(), c = s.new_var();
  s.add_clause({Lit::pos(a), Lit::neg(b)});
  s.add_clause({Lit::pos(c)});
  std::ostringstream out;
  s.write_dimacs(out);
  EXPECT_EQ(out.str(), "p cnf 3 2\n3 0\n1 -2 0\n");
}

TEST(Sat, AgreesWithEnumerationOnRandom3Cnf) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    int vars = 3 + static_cast<int>(rng() % 14);
    int clauses = static_cast<int>(vars * (3.0 + (rng() % 300) / 100.0));
    Cnf cnf = random_3cnf(rng, vars, clauses);
    CdclSolver s;
    for (int i = 0; i < vars; ++i) s.new_var();
    for (const auto& c : cnf) s.add_clause(c);
    bool expected = enumerate(cnf, vars);
    SolveResult r = s.solve();
    ASSERT_EQ(r == SolveResult::Sat, expected) << "round " << round;
    if (r == SolveResult::Sat) {
      EXPECT_TRUE(satisfies(cnf, model_bits(s, vars)));
    }
  }
}

TEST(Sat, IncrementalMatchesFresh) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int vars = 12;
    Cnf all = random_3cnf(rng, vars, 60);
    CdclSolver inc;
    for (int i = 0; i < vars; ++i) inc.new_var();
    Cnf so_far;
    for (std::size_t i = 0; i < all.size(); ++i) {
      inc.add_clause(all[i]);
      so_far.push_back(all[i]);
      if (i % 6 != 5) continue;
      std::vector<Lit> assume = {Lit::make(static_cast<Var>(rng() % vars), rng() & 1)};
      if (rng() % 3 == 0) {
        // A permanent unit, as step_free does.
        Lit u = Lit::make(static_cast<Var>(rng() % vars), rng() & 1);
        inc.add_clause({u});
        so_far.push_back({u});
      }
      CdclSolver fresh;
      for (int k = 0; k < vars; ++k) fresh.new_var();
      for (const auto& c : so_far) fresh.add_clause(c);
      SolveResult a = inc.solve(assume);
      SolveResult b = fresh.solve(assume);
      ASSERT_EQ(a, b) << "round " << round << " clause " << i;
      ASSERT_EQ(a == SolveResult::Sat, enumerate(so_far, vars, assume));
      if (a == SolveResult::Sat) {
        EXPECT_TRUE(satisfies(so_far, model_bits(inc, vars), assume));
      }
    }
  }
}

TEST(Sat, UnitNeverIncreasesActiveClauses) {
  std::mt19937_64 rng(3);
  const int vars = 30;
  CdclSolver s;
  for (int i = 0; i < vars; ++i) s.new_var();
  for (const auto& c : random_3cnf(rng, vars, 90)) s.add_clause(c);
  auto before = s.stats().num_active_clauses;
  for (int i = 0; i < 20; ++i) {
    if (s.add_clause({Lit::make(static_cast<Var>(rng() % vars), rng() & 1)}) == AddResult::ConflictAtRoot) break;
    auto now = s.stats().num_active_clauses;
    EXPECT_LE(now, before);
    before = now;
  }
}

TEST(Sat, DeterministicForSameHistory) {
  auto run = [] {
    std::mt19937_64 rng(5);
    CdclSolver s;
    for (int i = 0; i < 60; ++i) s.new_var();
    for (const auto& c : random_3cnf(rng, 60, 250)) s.add_clause(c);
    s.solve();
    return s.stats();
  };
  EXPECT_EQ(run(), run());
}

TEST(Sat, PhaseResetKeepsAnswers) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const int vars = 12;
    auto cnf = random_3cnf(rng, vars, 50);
    CdclOptions o;
    o.reset_phases = true;
    CdclSolver s(o);
    for (int v = 0; v < vars; ++v) s.new_var();
    for (const auto& c : cnf) s.add_clause(c);
    for (int k = 0; k < 3; ++k) {
      Lit a = Lit::make(static_cast<Var>(rng() % vars), rng() & 1);
      std::vector<Lit> assume{a};
      EXPECT_EQ(s.solve(assume) == SolveResult::Sat, enumerate(cnf, vars, assume));
    }
  }
}
