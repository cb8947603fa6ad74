#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "dio/bench.hpp"
#include "dio/cost_model.hpp"
#include "dio/solvers.hpp"
#include "dio/trace.hpp"

namespace dio {

namespace {

bool integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    fail(Error::Code::bad_config, "not an integer: '" + s + "'");
  }
}

struct ParsedProblem {
  Problem p;
  bool swapped;
  Integer a0, b0;  // original orientation, for printing
};

ParsedProblem read_problem(const std::vector<std::string>& nums) {
  Integer a = parse_integer(nums[0]);
  Integer b = parse_integer(nums[1]);
  Integer c = parse_integer(nums[2]);
  auto [p, swapped] = normalize_problem(a, b, c);
  return {std::move(p), swapped, std::move(a), std::move(b)};
}

std::string fmt_factor(const Integer& v) {
  if (v < 0) return "(" + v.get_str() + ")";
  return v.get_str();
}

int do_solve(const std::vector<std::string>& nums, const std::string& alg_id,
             std::ostream& out, std::ostream& err) {
  if (nums.size() != 3) {
    err << "solve expects exactly three integers: a b c\n";
    return 2;
  }
  const auto alg = algorithm_from_id(alg_id);
  if (!alg) {
    err << "unknown algorithm '" << alg_id
        << "' (expected dea-r, dea-optd, dea-optdi, dea-i, eea-i or eea-2)\n";
    return 2;
  }
  ParsedProblem in = read_problem(nums);
  if (in.swapped)
    out << "note: a < b on input; solved with the pair swapped and x, y swapped back\n";
  Outcome<Integer> o = solve(*alg, in.p);
  if (!is_solution(o)) {
    const auto& ns = std::get<NoSolution<Integer>>(o);
    out << ns.g << " is the gcd of original inputs and it does not divide "
        << in.p.c() << "\n";
    return 1;
  }
  if (!verify(in.p, o))
    fail(Error::Code::internal_invariant, "solution failed verification");
  const auto& s = std::get<Solution<Integer>>(o);
  const Integer& x = in.swapped ? s.y : s.x;
  const Integer& y = in.swapped ? s.x : s.y;
  out << "x=" << x << " y=" << y << "\n";
  out << "check: " << in.a0 << "*" << fmt_factor(x) << " + " << in.b0 << "*"
      << fmt_factor(y) << " = " << in.p.c() << "\n";
  return 0;
}

int do_trace(const std::vector<std::string>& nums, std::ostream& out,
             std::ostream& err) {
  if (nums.size() != 3) {
    err << "trace expects exactly three integers: a b c\n";
    return 2;
  }
  ParsedProblem in = read_problem(nums);
  if (in.swapped) out << "note: a < b on input; tracing the swapped pair\n";
  EuclidTrace t = euclid_trace(in.p);
  out << "chain:";
  for (const auto& v : t.chain) out << ' ' << v;
  out << "\nquotients:";
  for (const auto& q : t.quotients) out << ' ' << q;
  out << "\n";
  if (!t.halt_index) {
    out << "no halting index; gcd=" << dio::gcd(in.p.a(), in.p.b()) << "\n";
    return 1;
  }
  out << "halt index: " << *t.halt_index << "\n";
  out << "Q: " << *t.q_big << "\n";
  DeaRRun run = dea_r_recorded(in.p);
  for (std::size_t j = 0; j < run.f_values.size(); ++j)
    out << "f(" << t.chain[j] << "," << t.chain[j + 1] << ") = " << run.f_values[j]
        << "\n";
  return 0;
}

int do_cost_compare(const std::vector<std::string>& nums, bool csv, std::ostream& out,
                    std::ostream& err) {
  if (nums.size() != 3) {
    err << "cost-compare expects exactly three integers: a b c\n";
    return 2;
  }
  ParsedProblem in = read_problem(nums);
  CostLedger led;
  try {
    led = ledger(in.p);
  } catch (const Error& e) {
    if (e.code() == Error::Code::not_solvable) {
      out << dio::gcd(in.p.a(), in.p.b())
          << " is the gcd of original inputs and it does not divide " << in.p.c()
          << "\n";
      return 1;
    }
    if (e.code() == Error::Code::not_applicable) {
      out << "not applicable: " << e.what() << "\n";
      return 0;
    }
    throw;
  }
  if (csv) {
    const std::string pid =
        in.a0.get_str() + "_" + in.b0.get_str() + "_" + in.p.c().get_str();
    out << ledger_csv(pid, led);
    return 0;
  }
  out << "  j |     cost(DEA-R) |  cost(DEA-OPTD) | optd_cheaper | ineq17\n";
  for (std::size_t i = 0; i < led.steps.size(); ++i) {
    const auto& s = led.steps[i];
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%3ld | %15s | %15s | %12s | %s\n", s.j,
                  s.cost_dea_r.get_str().c_str(), s.cost_dea_optd.get_str().c_str(),
                  s.optd_cheaper ? "yes" : "no", to_string(led.ineq17[i]));
    out << buf;
  }
  out << "totals: dea_r=" << led.total_dea_r << " dea_optd=" << led.total_dea_optd
      << "\n";
  return 0;
}

int do_bench(const BenchConfig& cfg, const std::string& out_path, ReportFormat format,
             std::ostream& out, std::ostream& err) {
  auto reports = run_benchmark(cfg);
  const std::string text = emit_report(reports, format);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write output file: " << out_path << "\n";
      return 2;
    }
    f << text;
    out << "wrote " << out_path << "\n";
  }
  for (const auto& r : reports) {
    out << "run " << r.run_id << ":";
    for (std::size_t k = 0; k < r.algorithms.size(); ++k) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), " %s=%.1f", std::string(id(r.algorithms[k])).c_str(),
                    r.mean_ticks[k]);
      out << buf;
    }
    if (!r.wins.empty()) {
      out << " |";
      for (const auto& w : r.wins) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " %s>%s %.1f%%", std::string(id(w.a)).c_str(),
                      std::string(id(w.b)).c_str(), w.pct);
        out << buf;
      }
    }
    out << "\n";
  }
  out << "timer: " << reports.front().timer_name << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solvers, cost ledger and benchmark harness for two-variable linear "
               "Diophantine equations a*x + b*y = c",
               "dio"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a*x + b*y = c");
  std::string alg_id = "dea-optdi";
  solve_cmd->add_option("--alg", alg_id,
                        "Algorithm: dea-r, dea-optd, dea-optdi, dea-i, eea-i, eea-2")
      ->capture_default_str();

  auto* trace_cmd = app.add_subcommand(
      "trace", "Show the remainder chain, halting index and per-call values");

  auto* cost_cmd =
      app.add_subcommand("cost-compare", "Per-level bit-cost ledger: DEA-R vs DEA-OPTD");
  bool cost_csv = false;
  cost_cmd->add_flag("--csv", cost_csv, "Emit CSV rows instead of a table");

  auto* bench_cmd = app.add_subcommand("bench", "Run the timing protocol");
  std::optional<std::uint64_t> opt_n, opt_max, opt_seed;
  std::optional<std::uint32_t> opt_reps;
  std::string out_path, format_id = "csv", timer_id, config_path;
  bool flag_no_warmup = false, flag_native = false;
  bench_cmd->add_option("--n", opt_n, "Inputs per repetition (default 100000)");
  bench_cmd->add_option("--max", opt_max, "Largest input value (default 1024)");
  bench_cmd->add_option("--reps", opt_reps, "Repetitions (default 10)");
  bench_cmd->add_option("--seed", opt_seed, "Generator seed (default 1)");
  bench_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  bench_cmd->add_option("--format", format_id, "Report format: csv or markdown")
      ->capture_default_str();
  bench_cmd->add_option("--timer", timer_id, "Timer backend: auto, rdtsc or steady");
  bench_cmd->add_option("--config", config_path, "key=value config file");
  bench_cmd->add_flag("--no-warmup", flag_no_warmup,
                      "Skip the untimed warmup invocation");
  bench_cmd->add_flag("--native", flag_native,
                      "Solve with int64 instead of arbitrary precision");

  // a, b, c may be negative; pull integer-shaped tokens out before CLI11
  // sees them so they are not mistaken for flags.
  std::vector<std::string> nums;
  std::vector<std::string> rest;
  if (!args.empty() &&
      (args[0] == "solve" || args[0] == "trace" || args[0] == "cost-compare")) {
    rest.push_back(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (integer_token(args[i]))
        nums.push_back(args[i]);
      else
        rest.push_back(args[i]);
    }
  } else {
    rest = args;
  }

  try {
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(nums, alg_id, out, err);
    if (trace_cmd->parsed()) return do_trace(nums, out, err);
    if (cost_cmd->parsed()) return do_cost_compare(nums, cost_csv, out, err);
    if (bench_cmd->parsed()) {
      BenchConfig cfg;
      if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
      if (opt_n) cfg.num_inputs = *opt_n;
      if (opt_max) cfg.value_max = *opt_max;
      if (opt_reps) cfg.repetitions = *opt_reps;
      if (opt_seed) cfg.seed = *opt_seed;
      if (flag_no_warmup) cfg.warmup = false;
      if (flag_native) cfg.native_words = true;
      if (!timer_id.empty()) {
        const auto backend = timer_backend_from_id(timer_id);
        if (!backend) fail(Error::Code::bad_config, "unknown timer backend: " + timer_id);
        cfg.timer = *backend;
      }
      ReportFormat format;
      if (format_id == "csv") {
        format = ReportFormat::csv;
      } else if (format_id == "markdown") {
        format = ReportFormat::markdown;
      } else {
        fail(Error::Code::bad_config, "unknown format: " + format_id);
      }
      cfg.validate();
      return do_bench(cfg, out_path, format, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Error::Code::timer_unavailable ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dio
