#include <sched.h>

#include <bit>
#include <cmath>
#include <random>

#include "dio/bench.hpp"

namespace dio {

namespace {

// Values the int64 backend can handle without overflow anywhere in the
// solvers (coefficients grow to roughly value_max^3).
constexpr std::uint64_t kNativeValueMaxLimit = std::uint64_t{1} << 15;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw from [1, n] by masked rejection; mt19937_64 output is
// specified by the standard, so sequences are identical across platforms.
std::uint64_t uniform_1_to_n(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero((n - 1) | 1);
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < n) return v + 1;
  }
}

struct RawTriple {
  std::uint64_t a, b, c;
};

std::vector<RawTriple> draw_triples(std::uint64_t seed, std::uint64_t count,
                                    std::uint64_t value_max) {
  std::mt19937_64 rng(seed);
  std::vector<RawTriple> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t a, b;
    do {
      a = uniform_1_to_n(rng, value_max);
      b = uniform_1_to_n(rng, value_max);
    } while (a == b);
    const std::uint64_t c = uniform_1_to_n(rng, value_max);
    out.push_back({a, b, c});
  }
  return out;
}

std::vector<Problem> problems_from(const std::vector<RawTriple>& triples) {
  std::vector<Problem> out;
  out.reserve(triples.size());
  for (const auto& t : triples) {
    auto [p, swapped] =
        normalize_problem(Integer(static_cast<unsigned long>(t.a)),
                          Integer(static_cast<unsigned long>(t.b)),
                          Integer(static_cast<unsigned long>(t.c)));
    (void)swapped;  // timing does not care about orientation
    out.push_back(std::move(p));
  }
  return out;
}

template <typename T>
void consume(const T& value) {
  asm volatile("" : : "r,m"(&value) : "memory");
}

template <SolverInt Int>
std::uint64_t timed_solve(SolverFn<Int> fn, const BasicProblem<Int>& p,
                          const Timer& timer) {
  const std::uint64_t t0 = timer.begin();
  Outcome<Int> o = fn(p);
  consume(o);
  const std::uint64_t t1 = timer.end();
  return t1 - t0;
}

int pin_to_current_cpu() {
  const int cpu = sched_getcpu();
  if (cpu < 0) return -1;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(static_cast<unsigned>(cpu), &set);
  if (sched_setaffinity(0, sizeof(set), &set) != 0) return -1;
  return cpu;
}

template <SolverInt Int>
std::vector<Sample> measure_round(const BenchConfig& cfg,
                                  const std::vector<Problem>& problems,
                                  const std::vector<BasicProblem<Int>>& backend_problems,
                                  const Timer& timer) {
  std::vector<SolverFn<Int>> fns;
  fns.reserve(cfg.algorithms.size());
  for (Algorithm alg : cfg.algorithms) fns.push_back(solver_fn<Int>(alg));

  std::vector<Sample> samples;
  samples.reserve(problems.size());
  for (std::size_t i = 0; i < backend_problems.size(); ++i) {
    const auto& bp = backend_problems[i];
    Sample s{problems[i], {}};
    s.ticks.reserve(cfg.algorithms.size());
    for (std::size_t k = 0; k < fns.size(); ++k) {
      if (cfg.warmup) {
        Outcome<Int> o = fns[k](bp);
        consume(o);
      }
      s.ticks.emplace_back(cfg.algorithms[k], timed_solve(fns[k], bp, timer));
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<BasicProblem<std::int64_t>> to_native(const std::vector<RawTriple>& triples) {
  std::vector<BasicProblem<std::int64_t>> out;
  out.reserve(triples.size());
  for (const auto& t : triples) {
    auto [p, swapped] = normalize_problem<std::int64_t>(static_cast<std::int64_t>(t.a),
                                                        static_cast<std::int64_t>(t.b),
                                                        static_cast<std::int64_t>(t.c));
    (void)swapped;
    out.push_back(std::move(p));
  }
  return out;
}

// The four comparisons reported by the protocol, restricted to algorithms
// actually configured.
std::vector<std::pair<Algorithm, Algorithm>> comparisons(const BenchConfig& cfg) {
  static constexpr std::pair<Algorithm, Algorithm> kAll[] = {
      {Algorithm::dea_optdi, Algorithm::eea_i},
      {Algorithm::dea_optdi, Algorithm::eea_2},
      {Algorithm::dea_i, Algorithm::eea_i},
      {Algorithm::dea_i, Algorithm::eea_2},
  };
  auto present = [&](Algorithm a) {
    for (Algorithm x : cfg.algorithms)
      if (x == a) return true;
    return false;
  };
  std::vector<std::pair<Algorithm, Algorithm>> out;
  for (const auto& [a, b] : kAll)
    if (present(a) && present(b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

void BenchConfig::validate() const {
  if (num_inputs < 1) fail(Error::Code::bad_config, "num_inputs must be at least 1");
  if (value_max < 2) fail(Error::Code::bad_config, "value_max must be at least 2");
  if (repetitions < 1) fail(Error::Code::bad_config, "repetitions must be at least 1");
  if (algorithms.empty()) fail(Error::Code::bad_config, "algorithm list is empty");
  if (native_words && value_max > kNativeValueMaxLimit)
    fail(Error::Code::bad_config,
         "native_words requires value_max <= 2^15 to rule out overflow");
}

std::vector<Problem> generate_inputs(const BenchConfig& cfg) {
  cfg.validate();
  return problems_from(draw_triples(cfg.seed, cfg.num_inputs, cfg.value_max));
}

std::uint64_t time_algorithm(Algorithm alg, const Problem& p, const Timer& timer) {
  return timed_solve(solver_fn<Integer>(alg), p, timer);
}

std::uint64_t time_algorithm(Algorithm alg, const Problem& p) {
  return time_algorithm(alg, p, Timer::make(TimerBackend::auto_detect));
}

std::pair<std::uint64_t, Outcome<Integer>> time_algorithm_outcome(Algorithm alg,
                                                                  const Problem& p,
                                                                  const Timer& timer) {
  SolverFn<Integer> fn = solver_fn<Integer>(alg);
  const std::uint64_t t0 = timer.begin();
  Outcome<Integer> o = fn(p);
  consume(o);
  const std::uint64_t t1 = timer.end();
  return {t1 - t0, std::move(o)};
}

double pairwise_wins(const std::vector<Sample>& samples, Algorithm a, Algorithm b) {
  auto ticks_of = [](const Sample& s, Algorithm alg) -> std::uint64_t {
    for (const auto& [x, t] : s.ticks)
      if (x == alg) return t;
    fail(Error::Code::missing_timing,
         std::string("sample lacks a timing for ") + std::string(id(alg)));
  };
  std::size_t wins = 0;
  for (const auto& s : samples)
    if (ticks_of(s, a) < ticks_of(s, b)) ++wins;
  const double pct = 100.0 * static_cast<double>(wins) /
                     static_cast<double>(samples.size());
  return static_cast<double>(std::llround(pct * 10.0)) / 10.0;
}

std::vector<BenchReport> run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  const Timer timer = Timer::make(cfg.timer);
  const int cpu = pin_to_current_cpu();
  const auto pairs = comparisons(cfg);

  std::vector<BenchReport> reports;
  reports.reserve(cfg.repetitions);
  for (std::uint32_t rep = 1; rep <= cfg.repetitions; ++rep) {
    const std::uint64_t rep_seed = splitmix64(cfg.seed + rep);
    const auto triples = draw_triples(rep_seed, cfg.num_inputs, cfg.value_max);
    const auto problems = problems_from(triples);

    std::vector<Sample> samples;
    if (cfg.native_words) {
      samples = measure_round<std::int64_t>(cfg, problems, to_native(triples), timer);
    } else {
      samples = measure_round<Integer>(cfg, problems, problems, timer);
    }

    BenchReport rpt;
    rpt.run_id = rep;
    rpt.algorithms = cfg.algorithms;
    rpt.timer_name = std::string(timer.name());
    rpt.pinned_cpu = cpu;
    rpt.config = cfg;
    for (std::size_t k = 0; k < cfg.algorithms.size(); ++k) {
      std::uint64_t sum = 0;
      for (const auto& s : samples) sum += s.ticks[k].second;
      rpt.mean_ticks.push_back(static_cast<double>(sum) /
                               static_cast<double>(samples.size()));
    }
    for (const auto& [a, b] : pairs)
      rpt.wins.push_back({a, b, pairwise_wins(samples, a, b)});
    reports.push_back(std::move(rpt));
  }
  return reports;
}

}  // namespace dio
