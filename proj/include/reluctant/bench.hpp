// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reluctant/io.hpp"
#include "reluctant/random.hpp"
#include "reluctant/sorts.hpp"

namespace reluctant {

struct BenchOptions {
  AlgorithmId algorithm = AlgorithmId::InsertionSort;
  io::BenchCase bench_case = io::BenchCase::Sorted;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<Count> budget;
  bool override_guard = false;
  /// When false, elapsed_ns is written as 0 and the output is reproducible.
  bool timing = true;
};

/// Input for cell (n, trial). Random inputs are permutations of {1..n}
/// drawn from a stream derived from (seed, n, trial).
inline std::vector<Element> bench_input(io::BenchCase c, std::size_t n, std::uint64_t seed,
                                        std::size_t trial) {
  std::vector<Element> a(n);
  std::iota(a.begin(), a.end(), Element{1});
  switch (c) {
    case io::BenchCase::Sorted: break;
    case io::BenchCase::Reverse: std::reverse(a.begin(), a.end()); break;
    case io::BenchCase::Random: {
      Rng rng = derived_rng(seed, n, 2 * static_cast<std::uint64_t>(trial));
      fisher_yates(a, rng);
      break;
    }
  }
  return a;
}

/// Seed handed to BogoSort for cell (n, trial); independent of the input stream.
inline std::uint64_t bench_run_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return derived_seed(seed, n, 2 * static_cast<std::uint64_t>(trial) + 1);
}

/// Rows in (n, trial) order. Throws TooLarge for an unguarded ExpoSort sweep
/// past the default size limit, and lets BudgetExceeded escape.
inline std::vector<io::BenchRow> run_bench(const BenchOptions& opt) {
  if (opt.n_min > opt.n_max) throw std::invalid_argument("n-min must not exceed n-max");
  if (opt.trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (opt.algorithm == AlgorithmId::ExpoSort && opt.n_max > kExpoSortDefaultMaxN &&
      !opt.override_guard) {
    throw TooLarge("exposort bench with n-max = " + std::to_string(opt.n_max) + " > " +
                   std::to_string(kExpoSortDefaultMaxN) + " needs --i-have-time");
  }
  std::vector<io::BenchRow> rows;
  for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
    for (std::size_t t = 0; t < opt.trials; ++t) {
      SortRun run;
      run.algorithm = opt.algorithm;
      run.input = bench_input(opt.bench_case, n, opt.seed, t);
      run.budget = opt.budget;
      run.seed = bench_run_seed(opt.seed, n, t);
      run.override_guard = opt.override_guard;

      const auto start = std::chrono::steady_clock::now();
      const SortOutcome outcome = run_sort(run);
      const auto stop = std::chrono::steady_clock::now();

      io::BenchRow row;
      row.algorithm = opt.algorithm;
      row.n = n;
      row.bench_case = opt.bench_case;
      row.trial = t;
      row.counters = outcome.counters;
      row.elapsed_ns =
          opt.timing
              ? static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count())
              : 0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace reluctant
