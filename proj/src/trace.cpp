#include "dio/trace.hpp"

#include <algorithm>

namespace dio {

EuclidTrace euclid_trace(const Problem& p, TraceMode mode) {
  EuclidTrace t;
  t.chain.push_back(p.a());
  t.chain.push_back(p.b());
  std::size_t i = 1;
  for (;;) {
    const Integer& x = t.chain[i - 1];
    const Integer& y = t.chain[i];
    if (y == 0) break;
    if (!t.halt_index) {
      Integer d = p.c() - x;
      if (divisible(d, y)) {
        t.halt_index = static_cast<long>(i);
        t.q_big = exact_div(d, y);
        if (mode == TraceMode::to_halt) break;
      }
    }
    t.quotients.push_back(x / y);
    Integer r = x % y;
    t.chain.push_back(std::move(r));
    ++i;
  }
  return t;
}

namespace {

struct DeaRRecorder {
  static constexpr bool enabled = true;
  DeaRRun* run;

  void on_call() { ++run->calls; }

  void on_base(const Integer& f) { run->f_values.push_back(f); }

  void on_dea_r_step(const Integer& c, const Integer& prod, const Integer& num,
                     const Integer& divisor, const Integer& f_next, const Integer& a,
                     const Integer& fnew) {
    run->steps.push_back({bit_length(c), bit_length(prod), bit_length(num),
                          bit_length(divisor), bit_length(f_next), bit_length(a)});
    run->f_values.push_back(fnew);
  }

  template <typename Int>
  void on_dea_optd_step(const Int&, const Int&, const Int&, const Int&, const Int&,
                        const Int&, const Int&) {}
};

struct DeaOptdRecorder {
  static constexpr bool enabled = true;
  DeaOptdRun* run;

  void on_call() { ++run->calls; }

  void on_base(const Integer&) {}

  template <typename Int>
  void on_dea_r_step(const Int&, const Int&, const Int&, const Int&, const Int&,
                     const Int&, const Int&) {}

  void on_dea_optd_step(const Integer& f1, const Integer& prod, const Integer& q,
                        const Integer& f2, const Integer& a, const Integer& b,
                        const Integer&) {
    run->steps.push_back({bit_length(f1), bit_length(prod), bit_length(q),
                          bit_length(f2), bit_length(a), bit_length(b)});
  }
};

}  // namespace

DeaRRun dea_r_recorded(const Problem& p) {
  DeaRRun run;
  DeaRRecorder rec{&run};
  run.outcome = dea_r(p, rec);
  // Values are captured while the recursion unwinds (deepest level first).
  std::reverse(run.f_values.begin(), run.f_values.end());
  std::reverse(run.steps.begin(), run.steps.end());
  return run;
}

DeaOptdRun dea_optd_recorded(const Problem& p) {
  DeaOptdRun run;
  DeaOptdRecorder rec{&run};
  run.outcome = dea_optd(p, rec);
  std::reverse(run.steps.begin(), run.steps.end());
  return run;
}

}  // namespace dio
