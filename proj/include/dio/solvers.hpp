#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dio/integer.hpp"
#include "dio/problem.hpp"

namespace dio {

enum class Algorithm { dea_r, dea_optd, dea_optdi, dea_i, eea_i, eea_2 };

inline constexpr std::array<Algorithm, 6> all_algorithms = {
    Algorithm::dea_r,  Algorithm::dea_optd, Algorithm::dea_optdi,
    Algorithm::dea_i,  Algorithm::eea_i,    Algorithm::eea_2,
};

constexpr std::string_view id(Algorithm a) {
  switch (a) {
    case Algorithm::dea_r: return "dea-r";
    case Algorithm::dea_optd: return "dea-optd";
    case Algorithm::dea_optdi: return "dea-optdi";
    case Algorithm::dea_i: return "dea-i";
    case Algorithm::eea_i: return "eea-i";
    case Algorithm::eea_2: return "eea-2";
  }
  return "?";
}

constexpr std::string_view display_name(Algorithm a) {
  switch (a) {
    case Algorithm::dea_r: return "DEA-R";
    case Algorithm::dea_optd: return "DEA-OPTD";
    case Algorithm::dea_optdi: return "DEA-OPTDI";
    case Algorithm::dea_i: return "DEA-I";
    case Algorithm::eea_i: return "EEA-I";
    case Algorithm::eea_2: return "EEA-2";
  }
  return "?";
}

inline std::optional<Algorithm> algorithm_from_id(std::string_view s) {
  for (Algorithm a : all_algorithms)
    if (id(a) == s) return a;
  return std::nullopt;
}

/// No-op recorder for the recursive engines; instrumented runs substitute a
/// real recorder (see trace.hpp).
struct NoRecord {
  static constexpr bool enabled = false;
  void on_call() {}
  template <typename Int>
  void on_base(const Int&) {}
  template <typename Int>
  void on_dea_r_step(const Int&, const Int&, const Int&, const Int&, const Int&,
                     const Int&, const Int&) {}
  template <typename Int>
  void on_dea_optd_step(const Int&, const Int&, const Int&, const Int&, const Int&,
                        const Int&, const Int&) {}
};

namespace detail {

// Recursive core shared by dea_r and its instrumented runs. Returns false
// when the b = 0 branch fires (g receives the gcd of the original inputs);
// otherwise f receives the return value of the current call.
template <SolverInt Int, typename Rec>
bool dea_r_recurse(const Int& a, const Int& b, const Int& c, Int& f, Int& g, Rec& rec) {
  if constexpr (Rec::enabled) rec.on_call();
  if (b == 0) {
    g = a;
    return false;
  }
  Int d = c - a;
  if (divisible(d, b)) {
    f = exact_div(d, b);
    if constexpr (Rec::enabled) rec.on_base(f);
    return true;
  }
  Int r = a % b;
  if (!dea_r_recurse(b, r, c, f, g, rec)) return false;
  Int prod = f * a;
  Int num = c - prod;
  Int fnew = exact_div(num, b);
  if constexpr (Rec::enabled) rec.on_dea_r_step(c, prod, num, b, f, a, fnew);
  f = std::move(fnew);
  return true;
}

// Recursive core shared by dea_optd and its instrumented runs. On success
// (f1, f2) is the returned pair; at the top level that pair is (x, y).
template <SolverInt Int, typename Rec>
bool dea_optd_recurse(const Int& a, const Int& b, const Int& c, Int& f1, Int& f2,
                      Int& g, Rec& rec) {
  if constexpr (Rec::enabled) rec.on_call();
  if (b == 0) {
    g = a;
    return false;
  }
  Int d = c - a;
  if (divisible(d, b)) {
    f1 = Int(1);
    f2 = exact_div(d, b);
    if constexpr (Rec::enabled) rec.on_base(f2);
    return true;
  }
  Int r = a % b;
  if (!dea_optd_recurse(b, r, c, f1, f2, g, rec)) return false;
  Int q = a / b;
  Int prod = f2 * q;
  Int fnew = f1 - prod;
  if constexpr (Rec::enabled) rec.on_dea_optd_step(f1, prod, q, f2, a, b, fnew);
  f1 = std::move(f2);
  f2 = std::move(fnew);
  return true;
}

template <SolverInt Int>
struct Bezout {
  Int g, s, t;  // a*s + b*t = g
};

// Iterative extended Euclid carrying only the coefficient of b; the
// coefficient of a is back-solved from the identity at the end.
template <SolverInt Int>
Bezout<Int> bezout_single(const Int& a, const Int& b) {
  Int r0 = a, r1 = b;
  Int t0(0), t1(1);
  while (!(r1 == 0)) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Int t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Int num = r0 - b * t0;
  Int s = exact_div(num, a);
  return {std::move(r0), std::move(s), std::move(t0)};
}

// Textbook tabular extended Euclid carrying both coefficient sequences.
template <SolverInt Int>
Bezout<Int> bezout_tabular(const Int& a, const Int& b) {
  Int r0 = a, r1 = b;
  Int s0(1), s1(0);
  Int t0(0), t1(1);
  while (!(r1 == 0)) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Int s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Int t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

template <SolverInt Int>
Outcome<Int> scale_bezout(const BasicProblem<Int>& p, Bezout<Int> bez) {
  if (!divisible(p.c(), bez.g)) return NoSolution<Int>{std::move(bez.g)};
  Int k = exact_div(p.c(), bez.g);
  Int x = bez.s * k;
  Int y = bez.t * k;
  return Solution<Int>{std::move(x), std::move(y)};
}

}  // namespace detail

/// Recursive solver: computes y by back-substitution with c at every level,
/// then recovers x = (c - by)/a.
template <SolverInt Int, typename Rec>
Outcome<Int> dea_r(const BasicProblem<Int>& p, Rec& rec) {
  Int y, g;
  if (!detail::dea_r_recurse(p.a(), p.b(), p.c(), y, g, rec))
    return NoSolution<Int>{std::move(g)};
  Int num = p.c() - p.b() * y;
  Int x = exact_div(num, p.a());
  return Solution<Int>{std::move(x), std::move(y)};
}

template <SolverInt Int>
Outcome<Int> dea_r(const BasicProblem<Int>& p) {
  NoRecord rec;
  return dea_r(p, rec);
}

/// Optimized recursive solver: the second-order recurrence keeps c out of
/// the intermediate levels, so operands stay small. Returns the same (x, y)
/// as dea_r on every input.
template <SolverInt Int, typename Rec>
Outcome<Int> dea_optd(const BasicProblem<Int>& p, Rec& rec) {
  Int f1, f2, g;
  if (!detail::dea_optd_recurse(p.a(), p.b(), p.c(), f1, f2, g, rec))
    return NoSolution<Int>{std::move(g)};
  return Solution<Int>{std::move(f1), std::move(f2)};
}

template <SolverInt Int>
Outcome<Int> dea_optd(const BasicProblem<Int>& p) {
  NoRecord rec;
  return dea_optd(p, rec);
}

/// Iterative form of dea_optd: forward division loop storing the quotients,
/// then a two-variable backward sweep. Output is identical to dea_optd.
template <SolverInt Int>
Outcome<Int> dea_optdi(const BasicProblem<Int>& p) {
  Int a = p.a(), b = p.b();
  const Int& c = p.c();
  std::vector<Int> floors;
  for (;;) {
    Int d = c - a;
    if (divisible(d, b)) break;
    floors.push_back(a / b);
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
    if (b == 0) return NoSolution<Int>{std::move(a)};
  }
  Int f1(1);
  Int d = c - a;
  Int f2 = exact_div(d, b);
  for (std::size_t i = floors.size(); i-- > 0;) {
    Int fnew = f1 - f2 * floors[i];
    f1 = std::move(f2);
    f2 = std::move(fnew);
  }
  return Solution<Int>{std::move(f1), std::move(f2)};
}

/// Iterative form of dea_r: stores the remainder chain on the way down and
/// back-substitutes with c at every level on the way up.
template <SolverInt Int>
Outcome<Int> dea_i(const BasicProblem<Int>& p) {
  Int a = p.a(), b = p.b();
  const Int& c = p.c();
  std::vector<Int> chain{a, b};
  for (;;) {
    Int d = c - a;
    if (divisible(d, b)) break;
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
    if (b == 0) return NoSolution<Int>{std::move(a)};
    chain.push_back(b);
  }
  Int d = c - a;
  Int y = exact_div(d, b);
  for (std::size_t i = chain.size() - 1; i >= 2; --i) {
    Int num = c - y * chain[i - 2];
    y = exact_div(num, chain[i - 1]);
  }
  Int num = c - p.b() * y;
  Int x = exact_div(num, p.a());
  return Solution<Int>{std::move(x), std::move(y)};
}

/// Extended-Euclid baseline tracking one coefficient sequence.
template <SolverInt Int>
Outcome<Int> eea_i(const BasicProblem<Int>& p) {
  return detail::scale_bezout(p, detail::bezout_single(p.a(), p.b()));
}

/// Extended-Euclid baseline tracking both coefficient sequences.
template <SolverInt Int>
Outcome<Int> eea_2(const BasicProblem<Int>& p) {
  return detail::scale_bezout(p, detail::bezout_tabular(p.a(), p.b()));
}

template <SolverInt Int>
using SolverFn = Outcome<Int> (*)(const BasicProblem<Int>&);

template <SolverInt Int>
SolverFn<Int> solver_fn(Algorithm alg) {
  switch (alg) {
    case Algorithm::dea_r:
      return +[](const BasicProblem<Int>& p) { return dea_r(p); };
    case Algorithm::dea_optd:
      return +[](const BasicProblem<Int>& p) { return dea_optd(p); };
    case Algorithm::dea_optdi:
      return +[](const BasicProblem<Int>& p) { return dea_optdi(p); };
    case Algorithm::dea_i:
      return +[](const BasicProblem<Int>& p) { return dea_i(p); };
    case Algorithm::eea_i:
      return +[](const BasicProblem<Int>& p) { return eea_i(p); };
    case Algorithm::eea_2:
      return +[](const BasicProblem<Int>& p) { return eea_2(p); };
  }
  fail(Error::Code::bad_config, "unknown algorithm");
}

template <SolverInt Int>
Outcome<Int> solve(Algorithm alg, const BasicProblem<Int>& p) {
  return solver_fn<Int>(alg)(p);
}

/// Number of recursive-call equivalents: for the DEA family, division pairs
/// visited up to and including the halting pair (or the b = 0 pair when no
/// solution exists); for the EEA family, pairs visited down to b = 0
/// inclusive. The DEA count never exceeds the EEA count.
template <SolverInt Int>
long recursion_count(const BasicProblem<Int>& p, Algorithm alg) {
  Int a = p.a(), b = p.b();
  long n = 0;
  const bool dea = alg == Algorithm::dea_r || alg == Algorithm::dea_optd ||
                   alg == Algorithm::dea_optdi || alg == Algorithm::dea_i;
  for (;;) {
    ++n;
    if (b == 0) break;
    if (dea) {
      Int d = p.c() - a;
      if (divisible(d, b)) break;
    }
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return n;
}

}  // namespace dio
