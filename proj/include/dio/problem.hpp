#pragma once

#include <utility>
#include <variant>

#include "dio/error.hpp"
#include "dio/integer.hpp"

namespace dio {

template <SolverInt Int>
class BasicProblem;

template <SolverInt Int>
std::pair<BasicProblem<Int>, bool> normalize_problem(Int a, Int b, Int c);

/// Validated instance of ax + by = c with a > b >= 1 and c != 0.
///
/// The solver algorithms require this exact shape; raw user input goes
/// through normalize_problem, which swaps a and b when needed.
template <SolverInt Int>
class BasicProblem {
 public:
  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }

  /// Constructs from already-ordered inputs; throws if any precondition
  /// fails, including a < b.
  static BasicProblem validated(Int a, Int b, Int c) {
    auto [p, swapped] =
        normalize_problem<Int>(std::move(a), std::move(b), std::move(c));
    if (swapped)
      fail(Error::Code::bad_config, "inputs must satisfy a > b; use normalize_problem");
    return p;
  }

  bool operator==(const BasicProblem&) const = default;

 private:
  BasicProblem(Int a, Int b, Int c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  template <SolverInt I>
  friend std::pair<BasicProblem<I>, bool> normalize_problem(I a, I b, I c);

  Int a_, b_, c_;
};

using Problem = BasicProblem<Integer>;

/// Particular solution of ax + by = c.
template <SolverInt Int>
struct Solution {
  Int x, y;
  bool operator==(const Solution&) const = default;
};

/// Report that no solution exists; carries g = gcd(a, b) with g not
/// dividing c.
template <SolverInt Int>
struct NoSolution {
  Int g;
  bool operator==(const NoSolution&) const = default;
};

template <SolverInt Int>
using Outcome = std::variant<Solution<Int>, NoSolution<Int>>;

template <SolverInt Int>
bool is_solution(const Outcome<Int>& o) {
  return std::holds_alternative<Solution<Int>>(o);
}

/// Orders (a, b, c) for the solvers. Returns the problem plus a flag telling
/// the caller that a and b were exchanged, in which case x and y of any
/// solution must be swapped back.
template <SolverInt Int>
std::pair<BasicProblem<Int>, bool> normalize_problem(Int a, Int b, Int c) {
  if (a == 0 || b == 0 || c == 0)
    fail(Error::Code::zero_input, "a, b and c must all be nonzero");
  if (a < 0 || b < 0)
    fail(Error::Code::negative_coefficient, "a and b must be positive");
  if (a == b) fail(Error::Code::equal_inputs, "a and b must differ");
  const bool swapped = a < b;
  if (swapped) std::swap(a, b);
  return {BasicProblem<Int>(std::move(a), std::move(b), std::move(c)), swapped};
}

/// True iff the outcome is consistent with the problem: a solution satisfies
/// the equation exactly, a no-solution report carries the true gcd and the
/// gcd indeed does not divide c.
template <SolverInt Int>
bool verify(const BasicProblem<Int>& p, const Outcome<Int>& o) {
  if (const auto* s = std::get_if<Solution<Int>>(&o)) {
    Int lhs = p.a() * s->x + p.b() * s->y;
    return lhs == p.c();
  }
  const auto& ns = std::get<NoSolution<Int>>(o);
  if (!(ns.g == dio::gcd(p.a(), p.b()))) return false;
  return !divisible(p.c(), ns.g);
}

/// Shifts a particular solution along the solution family:
/// (x0 + (b/g)t, y0 - (a/g)t).
template <SolverInt Int>
std::pair<Int, Int> general_solution(const BasicProblem<Int>& p, const Outcome<Int>& o,
                                     const Int& t) {
  const auto* s = std::get_if<Solution<Int>>(&o);
  if (!s) fail(Error::Code::not_solvable, "general_solution requires a particular solution");
  Int g = dio::gcd(p.a(), p.b());
  Int b_step = exact_div(p.b(), g);
  Int a_step = exact_div(p.a(), g);
  Int x = s->x + b_step * t;
  Int y = s->y - a_step * t;
  return {std::move(x), std::move(y)};
}

}  // namespace dio
