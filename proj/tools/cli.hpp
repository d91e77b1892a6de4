// SPDX-License-Identifier: Apache-2.0
#pragma once

// `reluctant` command-line front end. Kept as a header so the tests can drive
// it in-process with string streams.
//
// Exit codes: 0 success, 1 usage/parse/guard errors or failed verification,
// 2 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reluctant/reluctant.hpp"

namespace reluctant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;

inline constexpr const char* kSeedEnv = "RELUCTANT_SEED";

namespace detail {

/// --seed if given, else RELUCTANT_SEED if set.
inline std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    const std::int64_t v = io::parse_int64(env, kSeedEnv);
    return static_cast<std::uint64_t>(v);
  }
  return std::nullopt;
}

inline std::vector<Element> read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return io::parse_elements(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file '" + path + "'");
  return io::parse_elements(file);
}

struct SortArgs {
  std::string alg;
  std::optional<Count> budget;
  std::optional<std::uint64_t> seed;
  bool i_have_time = false;
  std::string input;
};

inline void add_sort_options(CLI::App* cmd, SortArgs& a) {
  cmd->add_option("--alg", a.alg, "exposort|cubesort|insertionsort|stoogesort|slowsort|bogosort")
      ->required();
  cmd->add_option("--budget", a.budget, "comparison cap (shuffle cap for bogosort)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "RNG seed (bogosort); falls back to $RELUCTANT_SEED");
  cmd->add_flag("--i-have-time", a.i_have_time, "lift the exposort size guard");
  cmd->add_option("input", a.input, "file of whitespace-separated integers (default: stdin)");
}

inline AlgorithmId algorithm_or_throw(const std::string& name) {
  const auto id = parse_algorithm(name);
  if (!id) throw ParseError("unknown algorithm '" + name + "'");
  return *id;
}

/// Shared body of `run` and `trace`.
inline int sort_command(const SortArgs& a, bool with_output, std::istream& in, std::ostream& out) {
  const AlgorithmId alg = algorithm_or_throw(a.alg);
  SortRun run;
  run.algorithm = alg;
  run.input = read_input(a.input, in);
  run.budget = a.budget;
  run.override_guard = a.i_have_time;
  std::optional<std::uint64_t> seed = resolve_seed(a.seed);
  if (alg == AlgorithmId::BogoSort && !seed) seed = 0;
  run.seed = seed.value_or(0);

  try {
    const SortOutcome outcome = run_sort(run);
    out << io::trace_json(alg, seed, run.input, outcome, with_output).dump(2) << '\n';
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    out << io::budget_exceeded_json(alg, seed, run.input, e.counters()).dump(2) << '\n';
    return kExitBudget;
  }
}

struct BenchArgs {
  std::string alg;
  std::string bench_case = "random";
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::size_t trials = 1;
  std::optional<std::uint64_t> seed;
  std::optional<Count> budget;
  bool i_have_time = false;
  bool no_timing = false;
};

inline int bench_command(const BenchArgs& a, std::ostream& out) {
  BenchOptions opt;
  opt.algorithm = algorithm_or_throw(a.alg);
  const auto bc = io::parse_bench_case(a.bench_case);
  if (!bc) throw ParseError("unknown case '" + a.bench_case + "'");
  opt.bench_case = *bc;
  opt.n_min = a.n_min;
  opt.n_max = a.n_max;
  opt.trials = a.trials;
  opt.seed = resolve_seed(a.seed).value_or(0);
  opt.budget = a.budget;
  opt.override_guard = a.i_have_time;
  opt.timing = !a.no_timing;

  const auto rows = run_bench(opt);
  out << io::kBenchHeader << '\n';
  for (const auto& r : rows) io::write_bench_row(out, r);
  return kExitOk;
}

inline int verify_command(std::size_t max_n, std::optional<std::uint64_t> seed_flag,
                          std::ostream& out) {
  verify::VerifyOptions opt;
  opt.max_n = max_n;
  opt.seed = resolve_seed(seed_flag).value_or(0);
  const auto report = verify::verify_all(opt);

  out << std::left << std::setw(20) << "suite" << std::setw(8) << "result" << std::setw(12)
      << "cases"
      << "note\n";
  for (const auto& s : report.suites) {
    out << std::left << std::setw(20) << s.name << std::setw(8) << (s.passed ? "PASS" : "FAIL")
        << std::setw(12) << s.cases << s.note << '\n';
    for (const auto& f : s.failures) out << "    " << f << '\n';
  }
  out << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << '\n';
  return report.all_passed() ? kExitOk : kExitError;
}

inline int fit_command(const std::string& path, std::istream& in, std::ostream& out) {
  std::vector<io::BenchRow> rows;
  if (path == "-") {
    rows = io::parse_bench_csv(in);
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open CSV '" + path + "'");
    rows = io::parse_bench_csv(file);
  }
  const auto report = growth::fit(io::median_series(rows));
  out << io::fit_report_json(report).dump(2) << '\n';
  return kExitOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Instrumented laboratory for deliberately slow sorting algorithms", "reluctant"};
  app.require_subcommand(1);

  detail::SortArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "sort the input and print the outcome as JSON");
  detail::add_sort_options(run_cmd, run_args);

  detail::SortArgs trace_args;
  auto* trace_cmd = app.add_subcommand("trace", "print the swap trace of sorting the input");
  detail::add_sort_options(trace_cmd, trace_args);

  detail::BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "sweep input sizes and print counters as CSV");
  bench_cmd->add_option("--alg", bench_args.alg, "algorithm name")->required();
  bench_cmd->add_option("--case", bench_args.bench_case, "sorted|reverse|random")
      ->capture_default_str();
  bench_cmd->add_option("--n-min", bench_args.n_min, "smallest n")->capture_default_str();
  bench_cmd->add_option("--n-max", bench_args.n_max, "largest n")->required();
  bench_cmd->add_option("--trials", bench_args.trials, "trials per n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "sweep seed; falls back to $RELUCTANT_SEED");
  bench_cmd->add_option("--budget", bench_args.budget, "per-run budget")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--i-have-time", bench_args.i_have_time, "lift the exposort size guard");
  bench_cmd->add_flag("--no-timing", bench_args.no_timing,
                      "write elapsed_ns as 0 for reproducible output");

  std::size_t verify_max_n = 8;
  std::optional<std::uint64_t> verify_seed;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--max-n", verify_max_n, "largest exhaustive n")
      ->check(CLI::Range(std::size_t{1}, oracle::kMaxPermutationN))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "seed for random inputs");

  std::string fit_input;
  auto* fit_cmd = app.add_subcommand("fit", "fit growth models to a bench CSV");
  fit_cmd->add_option("--input", fit_input, "bench CSV path, or - for stdin")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("reluctant");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*run_cmd) return detail::sort_command(run_args, true, in, out);
    if (*trace_cmd) return detail::sort_command(trace_args, false, in, out);
    if (*bench_cmd) return detail::bench_command(bench_args, out);
    if (*verify_cmd) return detail::verify_command(verify_max_n, verify_seed, out);
    if (*fit_cmd) return detail::fit_command(fit_input, in, out);
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded after " << e.counters().comparisons << " comparisons\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace reluctant::cli
