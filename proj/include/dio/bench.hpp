#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dio/problem.hpp"
#include "dio/solvers.hpp"

namespace dio {

enum class TimerBackend { auto_detect, rdtsc, steady };

std::string_view timer_backend_id(TimerBackend b);
std::optional<TimerBackend> timer_backend_from_id(std::string_view s);

/// Environment variable that forces the steady-clock fallback timer.
inline constexpr const char* kTimerFallbackEnv = "DIO_TIMER_FALLBACK";

/// Benchmark protocol parameters.
struct BenchConfig {
  std::uint64_t num_inputs = 100000;
  std::uint64_t value_max = 1024;  // inputs drawn uniformly from [1, value_max]
  std::uint32_t repetitions = 10;
  std::uint64_t seed = 1;
  bool warmup = true;        // one untimed invocation per (algorithm, input)
  bool native_words = false; // solve with int64 instead of arbitrary precision
  TimerBackend timer = TimerBackend::auto_detect;
  std::vector<Algorithm> algorithms = {Algorithm::dea_optdi, Algorithm::dea_i,
                                       Algorithm::eea_2, Algorithm::eea_i};

  void validate() const;  // throws bad_config
};

/// Reads key=value lines (num_inputs, value_max, repetitions, seed, warmup,
/// timer_backend) on top of `base`. '#' starts a comment; unknown keys are
/// rejected.
BenchConfig load_config_file(const std::string& path, BenchConfig base = {});

/// Resolved tick source. rdtsc where the hardware supports it, otherwise a
/// monotonic clock; the DIO_TIMER_FALLBACK environment variable forces the
/// fallback and makes an explicit rdtsc request an error.
class Timer {
 public:
  static Timer make(TimerBackend requested);  // throws timer_unavailable

  std::uint64_t begin() const;
  std::uint64_t end() const;
  std::string_view name() const { return rdtsc_ ? "rdtsc" : "steady_clock"; }

 private:
  explicit Timer(bool rdtsc) : rdtsc_(rdtsc) {}
  bool rdtsc_;
};

/// One benchmarked input with the tick count of every configured algorithm.
struct Sample {
  Problem problem;
  std::vector<std::pair<Algorithm, std::uint64_t>> ticks;
};

/// num_inputs problems with a, b, c uniform in [1, value_max], a = b redrawn,
/// a < b swapped. Identical seeds produce identical lists on every platform.
std::vector<Problem> generate_inputs(const BenchConfig& cfg);

std::uint64_t time_algorithm(Algorithm alg, const Problem& p, const Timer& timer);
std::uint64_t time_algorithm(Algorithm alg, const Problem& p);

/// Timed invocation that also hands back the outcome computed inside the
/// timed region.
std::pair<std::uint64_t, Outcome<Integer>> time_algorithm_outcome(Algorithm alg,
                                                                  const Problem& p,
                                                                  const Timer& timer);

/// Percentage of samples (one decimal place) on which `a` took strictly
/// fewer ticks than `b`. Ties are not wins. Throws missing_timing when a
/// sample lacks either algorithm.
double pairwise_wins(const std::vector<Sample>& samples, Algorithm a, Algorithm b);

/// Aggregates for one repetition: mean ticks per algorithm plus the standard
/// pairwise win percentages, with the configuration and timer echoed.
struct BenchReport {
  struct Win {
    Algorithm a, b;
    double pct;  // % of inputs where a beat b
  };

  std::uint32_t run_id = 0;
  std::vector<Algorithm> algorithms;
  std::vector<double> mean_ticks;  // parallel to algorithms
  std::vector<Win> wins;
  std::string timer_name;
  int pinned_cpu = -1;  // -1 when pinning was unavailable
  BenchConfig config;
};

/// Runs the full protocol: `repetitions` rounds, each with freshly generated
/// inputs (seed advanced deterministically), every algorithm timed once per
/// input after an optional warmup invocation.
std::vector<BenchReport> run_benchmark(const BenchConfig& cfg);

enum class ReportFormat { csv, markdown };

/// CSV emits two blocks, `run_id,algorithm,mean_ticks` and
/// `run_id,comparison,pct_better`; markdown renders the mean and win tables.
std::string emit_report(const std::vector<BenchReport>& reports, ReportFormat format);

}  // namespace dio
