#include <cstdio>
#include <fstream>
#include <sstream>

#include "dio/bench.hpp"

namespace dio {

namespace {

std::string one_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string comparison_label(Algorithm a, Algorithm b) {
  return std::string(id(a)) + "_vs_" + std::string(id(b));
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(Error::Code::bad_config, "bad value for " + key + ": '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  fail(Error::Code::bad_config, "bad value for " + key + ": '" + value + "'");
}

std::string csv_block_means(const std::vector<BenchReport>& reports) {
  std::string out = "run_id,algorithm,mean_ticks\n";
  for (const auto& r : reports)
    for (std::size_t k = 0; k < r.algorithms.size(); ++k)
      out += std::to_string(r.run_id) + "," + std::string(id(r.algorithms[k])) + "," +
             one_decimal(r.mean_ticks[k]) + "\n";
  return out;
}

std::string csv_block_wins(const std::vector<BenchReport>& reports) {
  std::string out = "run_id,comparison,pct_better\n";
  for (const auto& r : reports)
    for (const auto& w : r.wins)
      out += std::to_string(r.run_id) + "," + comparison_label(w.a, w.b) + "," +
             one_decimal(w.pct) + "\n";
  return out;
}

std::string markdown_report(const std::vector<BenchReport>& reports) {
  const auto& first = reports.front();
  std::ostringstream out;
  out << "# Benchmark report\n\n";
  out << "- inputs per run: " << first.config.num_inputs << "\n";
  out << "- value range: [1, " << first.config.value_max << "]\n";
  out << "- repetitions: " << first.config.repetitions << "\n";
  out << "- seed: " << first.config.seed << "\n";
  out << "- warmup: " << (first.config.warmup ? "on" : "off") << "\n";
  out << "- integer backend: " << (first.config.native_words ? "int64" : "gmp") << "\n";
  out << "- timer: " << first.timer_name;
  if (first.pinned_cpu >= 0) out << " (pinned to cpu " << first.pinned_cpu << ")";
  out << "\n\n";

  out << "## Mean ticks per run\n\n";
  out << "| run |";
  for (Algorithm a : first.algorithms) out << ' ' << display_name(a) << " |";
  out << "\n|---:|";
  for (std::size_t k = 0; k < first.algorithms.size(); ++k) out << "---:|";
  out << "\n";
  for (const auto& r : reports) {
    out << "| " << r.run_id << " |";
    for (double m : r.mean_ticks) out << ' ' << one_decimal(m) << " |";
    out << "\n";
  }

  if (!first.wins.empty()) {
    out << "\n## Win percentages per run\n\n";
    out << "| run |";
    for (const auto& w : first.wins)
      out << ' ' << display_name(w.a) << " vs " << display_name(w.b) << " |";
    out << "\n|---:|";
    for (std::size_t k = 0; k < first.wins.size(); ++k) out << "---:|";
    out << "\n";
    for (const auto& r : reports) {
      out << "| " << r.run_id << " |";
      for (const auto& w : r.wins) out << ' ' << one_decimal(w.pct) << " |";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

BenchConfig load_config_file(const std::string& path, BenchConfig base) {
  std::ifstream in(path);
  if (!in) fail(Error::Code::bad_config, "cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(Error::Code::bad_config,
           path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "num_inputs") {
      base.num_inputs = parse_u64(key, value);
    } else if (key == "value_max") {
      base.value_max = parse_u64(key, value);
    } else if (key == "repetitions") {
      base.repetitions = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "seed") {
      base.seed = parse_u64(key, value);
    } else if (key == "warmup") {
      base.warmup = parse_bool(key, value);
    } else if (key == "timer_backend") {
      const auto backend = timer_backend_from_id(value);
      if (!backend) fail(Error::Code::bad_config, "unknown timer_backend: " + value);
      base.timer = *backend;
    } else {
      fail(Error::Code::bad_config,
           path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

std::string emit_report(const std::vector<BenchReport>& reports, ReportFormat format) {
  if (reports.empty()) fail(Error::Code::empty_reports, "no reports to emit");
  if (format == ReportFormat::csv)
    return csv_block_means(reports) + "\n" + csv_block_wins(reports);
  return markdown_report(reports);
}

}  // namespace dio
