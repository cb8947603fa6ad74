#pragma once

#include <stdexcept>
#include <string>

namespace dio {

/// Library-wide error with a machine-readable code. Precondition violations
/// and environment failures throw this; "no solution" is an ordinary Outcome,
/// not an error.
class Error : public std::runtime_error {
 public:
  enum class Code {
    zero_input,
    equal_inputs,
    negative_coefficient,
    not_solvable,
    not_applicable,
    internal_invariant,
    missing_timing,
    empty_reports,
    bad_config,
    timer_unavailable,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dio
