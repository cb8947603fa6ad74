#pragma once

#include <gmpxx.h>

#include <bit>
#include <concepts>
#include <cstdint>
#include <utility>

#include "dio/error.hpp"

namespace dio {

/// Arbitrary-precision signed integer; the scalar for all problem data.
using Integer = mpz_class;

/// Scalar types the solver templates accept. Integer is the canonical
/// backend; std::int64_t is available for native-word sensitivity runs.
template <typename T>
concept SolverInt = requires(const T& a, const T& b) {
  T(0);
  T(1);
  { a + b };
  { a - b };
  { a * b };
  { a / b };
  { a % b };
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

/// Number of bits of |v|, with bit_length(0) = 1 so that every operand has a
/// positive size in the cost model.
inline int bit_length(const Integer& v) {
  // mpz_sizeinbase ignores the sign and returns 1 for zero.
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

constexpr int bit_length(std::int64_t v) {
  const auto mag =
      v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  return mag == 0 ? 1 : static_cast<int>(std::bit_width(mag));
}

/// True iff d divides v (d != 0). Convention-independent for negative v.
inline bool divisible(const Integer& v, const Integer& d) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

template <std::signed_integral T>
constexpr bool divisible(T v, T d) {
  return v % d == 0;
}

/// Quotient of a division that must be exact. A nonzero remainder means the
/// caller's derivation is wrong, never bad input.
inline Integer exact_div(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) fail(Error::Code::internal_invariant, "exact division left a remainder");
  return q;
}

template <std::signed_integral T>
constexpr T exact_div(T num, T den) {
  if (num % den != 0)
    fail(Error::Code::internal_invariant, "exact division left a remainder");
  return num / den;
}

/// Euclid's gcd for a > 0, b >= 0; gcd(a, 0) = a.
template <SolverInt Int>
Int gcd(Int a, Int b) {
  while (!(b == 0)) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace dio
