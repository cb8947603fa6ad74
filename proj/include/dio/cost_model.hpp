#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dio/integer.hpp"
#include "dio/problem.hpp"

namespace dio {

/// Cost of adding (or subtracting) an m-bit and an n-bit integer.
inline Integer cost_add(int m, int n) { return Integer(m) + Integer(n); }

/// Cost of multiplying (or dividing) an m-bit and an n-bit integer.
inline Integer cost_mul(int m, int n) { return Integer(m) * Integer(n); }

enum class IneqStatus { holds, fails, not_applicable };

constexpr const char* to_string(IneqStatus s) {
  switch (s) {
    case IneqStatus::holds: return "holds";
    case IneqStatus::fails: return "fails";
    case IneqStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Bit-cost of the differing return-line computations at recursion level j.
struct StepCost {
  long j;
  Integer cost_dea_r;
  Integer cost_dea_optd;
  bool optd_cheaper;  // cost_dea_optd <= cost_dea_r
};

/// Per-level cost comparison of dea_r against dea_optd, for the levels where
/// both execute their recursive return line (j = 1..i_1 - 2).
struct CostLedger {
  std::vector<StepCost> steps;
  Integer total_dea_r;
  Integer total_dea_optd;
  std::vector<IneqStatus> ineq17;  // parallel to steps
};

/// Builds the ledger from instrumented dea_r and dea_optd runs. Throws
/// not_solvable when gcd(a, b) does not divide c and not_applicable when the
/// halting index is below 3 (no comparable level exists).
CostLedger ledger(const Problem& p);

/// Raw values entering the cost inequality at level j.
struct Ineq17Inputs {
  Integer f_jp2;  // f(a_{j+2}, a_{j+3})
  Integer x;      // f(a_{j+1}, a_{j+2})
  Integer y;      // floor(a_j / a_{j+1})
  Integer a_j, a_jp1, a_jp2;
  Integer c;
};

struct Ineq17Eval {
  mpq_class lhs, rhs;
  bool holds;  // lhs <= rhs
};

/// Exact rational evaluation of the squared-and-expanded cost inequality,
/// with log terms replaced by bit lengths.
Ineq17Eval evaluate_ineq17(const Ineq17Inputs& in);

/// Inputs for level j of a solvable problem, or not_applicable territory
/// (unsolvable, or j outside [1, i_1 - 2]) signalled by std::nullopt.
std::optional<Ineq17Inputs> ineq17_inputs(const Problem& p, long j);

/// Evaluates the inequality at level j; not_applicable outside the ledger
/// range or when no ledger exists for p.
IneqStatus check_ineq17(const Problem& p, long j);

/// CSV rows (with header) for one problem's ledger:
/// problem_id,j,cost_dea_r,cost_dea_optd,optd_cheaper,ineq17_status
std::string ledger_csv(const std::string& problem_id, const CostLedger& led);

}  // namespace dio
