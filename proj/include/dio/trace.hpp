#pragma once

#include <optional>
#include <vector>

#include "dio/problem.hpp"
#include "dio/solvers.hpp"

namespace dio {

enum class TraceMode {
  to_halt,  // stop at the halting pair, like the DEA recursion
  full,     // run the division chain down to remainder 0
};

/// Remainder chain a_1 > a_2 > ... with quotients q_i (a_i = q_i a_{i+1} +
/// a_{i+2}), the halting index i_1 = min{ i : a_{i+1} | c - a_i } when one
/// exists, and Q = (c - a_{i_1}) / a_{i_1 + 1}.
struct EuclidTrace {
  std::vector<Integer> chain;
  std::vector<Integer> quotients;
  std::optional<long> halt_index;
  std::optional<Integer> q_big;
};

EuclidTrace euclid_trace(const Problem& p, TraceMode mode = TraceMode::to_halt);

/// dea_r run with the per-call return values and operand sizes captured.
struct DeaRRun {
  struct Step {
    int c_bits;        // c
    int prod_bits;     // f(a_{j+1}, a_{j+2}) * a_j
    int num_bits;      // c - f(a_{j+1}, a_{j+2}) * a_j
    int divisor_bits;  // a_{j+1}
    int f_next_bits;   // f(a_{j+1}, a_{j+2})
    int a_bits;        // a_j
  };

  Outcome<Integer> outcome;
  std::vector<Integer> f_values;  // f(a_j, a_{j+1}) for j = 1..i_1, ascending
  std::vector<Step> steps;        // recursive-return levels j = 1..i_1-1, ascending
  long calls = 0;
};

DeaRRun dea_r_recorded(const Problem& p);

/// dea_optd run with the operand sizes of each recursive return captured.
struct DeaOptdRun {
  struct Step {
    int f1_bits;    // f(a_{j+2}, a_{j+3})
    int prod_bits;  // floor(a_j / a_{j+1}) * f(a_{j+1}, a_{j+2})
    int q_bits;     // floor(a_j / a_{j+1})
    int f2_bits;    // f(a_{j+1}, a_{j+2})
    int a_bits;     // a_j
    int b_bits;     // a_{j+1}
  };

  Outcome<Integer> outcome;
  std::vector<Step> steps;  // recursive-return levels j = 1..i_1-1, ascending
  long calls = 0;
};

DeaOptdRun dea_optd_recorded(const Problem& p);

}  // namespace dio
