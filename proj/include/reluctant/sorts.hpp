// SPDX-License-Identifier: Apache-2.0
#pragma once

// The six instrumented sorts.
//
// Each kernel is a template over a sink with the Recorder interface, so the
// same control flow can run against a full Recorder or a lighter test sink.
// Kernels work 0-based; the sink receives 1-based positions.
//
// Recursion depth is at most n for ExpoSort, CubeSort and SlowSort and
// O(log n) for StoogeSort, so plain recursion is safe at every size these
// algorithms can finish in.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reluctant/instrumentation.hpp"
#include "reluctant/random.hpp"
#include "reluctant/types.hpp"

namespace reluctant {

/// Largest ExpoSort input accepted without an explicit budget or override.
inline constexpr std::size_t kExpoSortDefaultMaxN = 26;
/// Shuffle cap applied to BogoSort when the run carries no budget.
inline constexpr Count kBogoSortDefaultShuffleCap = 10'000'000;

struct SortRun {
  std::vector<Element> input;
  AlgorithmId algorithm = AlgorithmId::InsertionSort;
  /// Comparison cap; a shuffle cap for BogoSort. Must be >= 1 when present.
  std::optional<Count> budget;
  /// Only BogoSort consumes randomness.
  std::uint64_t seed = 0;
  /// Lifts the ExpoSort size guard.
  bool override_guard = false;
};

struct SortOutcome {
  std::vector<Element> output;
  CounterSet counters;
  SwapTrace trace;
};

/// Translates a run's single budget figure into the recorder's limits.
inline Budget budget_for(const SortRun& run) {
  if (run.budget && *run.budget == 0) throw std::invalid_argument("budget must be >= 1");
  Budget b;
  if (run.algorithm == AlgorithmId::BogoSort) {
    b.max_shuffles = run.budget.value_or(kBogoSortDefaultShuffleCap);
  } else {
    b.max_comparisons = run.budget;
  }
  return b;
}

namespace kernels {

/// ExpoSort on the prefix a[0, n).
template <class Sink>
void expo_sort(std::span<Element> a, std::size_t n, Sink& sink) {
  sink.record_invocation();
  if (n > 1) {
    expo_sort(a, n - 1, sink);
    if (sink.greater(a[n - 2], a[n - 1])) {
      sink.record_adjacent_swap(n - 1, a[n - 2], a[n - 1]);
      std::swap(a[n - 2], a[n - 1]);
    }
    expo_sort(a, n - 1, sink);
  }
}

/// CubeSort on the prefix a[0, n): ExpoSort with the second recursive call
/// moved under the swap branch.
template <class Sink>
void cube_sort(std::span<Element> a, std::size_t n, Sink& sink) {
  sink.record_invocation();
  if (n > 1) {
    cube_sort(a, n - 1, sink);
    if (sink.greater(a[n - 2], a[n - 1])) {
      sink.record_adjacent_swap(n - 1, a[n - 2], a[n - 1]);
      std::swap(a[n - 2], a[n - 1]);
      cube_sort(a, n - 1, sink);
    }
  }
}

template <class Sink>
void insertion_sort(std::span<Element> a, Sink& sink) {
  sink.record_invocation();
  for (std::size_t j = 1; j < a.size(); ++j) {
    std::size_t i = j;
    // The `i > 0` half of the guard short-circuits and is not a comparison.
    while (i > 0 && sink.greater(a[i - 1], a[i])) {
      sink.record_adjacent_swap(i, a[i - 1], a[i]);
      std::swap(a[i - 1], a[i]);
      --i;
    }
  }
}

/// Textbook StoogeSort on the closed range [i, j]:
///
///   if A[i] > A[j]: swap A[i], A[j]
///   if j - i + 1 > 2:
///     k = floor((j - i + 1) / 3)
///     StoogeSort(A, i, j - k)
///     StoogeSort(A, i + k, j)
///     StoogeSort(A, i, j - k)
template <class Sink>
void stooge_sort(std::span<Element> a, std::size_t i, std::size_t j, Sink& sink) {
  sink.record_invocation();
  if (sink.greater(a[i], a[j])) {
    sink.record_swap(i + 1, j + 1, a[i], a[j]);
    std::swap(a[i], a[j]);
  }
  const std::size_t len = j - i + 1;
  if (len > 2) {
    const std::size_t k = len / 3;
    stooge_sort(a, i, j - k, sink);
    stooge_sort(a, i + k, j, sink);
    stooge_sort(a, i, j - k, sink);
  }
}

/// Broder-Stolfi SlowSort on the closed range [i, j]:
///
///   if i >= j: return
///   m = floor((i + j) / 2)
///   SlowSort(A, i, m)
///   SlowSort(A, m + 1, j)
///   if A[m] > A[j]: swap A[m], A[j]
///   SlowSort(A, i, j - 1)
template <class Sink>
void slow_sort(std::span<Element> a, std::ptrdiff_t i, std::ptrdiff_t j, Sink& sink) {
  sink.record_invocation();
  if (i >= j) return;
  const std::ptrdiff_t m = i + (j - i) / 2;
  slow_sort(a, i, m, sink);
  slow_sort(a, m + 1, j, sink);
  const auto um = static_cast<std::size_t>(m);
  const auto uj = static_cast<std::size_t>(j);
  if (sink.greater(a[um], a[uj])) {
    sink.record_swap(um + 1, uj + 1, a[um], a[uj]);
    std::swap(a[um], a[uj]);
  }
  slow_sort(a, i, j - 1, sink);
}

template <class Sink>
bool counted_is_sorted(std::span<const Element> a, Sink& sink) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (sink.greater(a[i - 1], a[i])) return false;
  }
  return true;
}

/// Checks sortedness before every shuffle, so sorted input costs 0 shuffles.
/// Shuffles are not recorded as swap events.
template <class Sink>
void bogo_sort(std::span<Element> a, Rng& rng, Sink& sink) {
  sink.record_invocation();
  while (!counted_is_sorted(a, sink)) {
    sink.record_shuffle();
    fisher_yates(a, rng);
  }
}

}  // namespace kernels

namespace detail {

inline void require_algorithm(const SortRun& run, AlgorithmId expected) {
  if (run.algorithm != expected) {
    throw std::invalid_argument("run is for " + std::string(name_of(run.algorithm)) +
                                ", not " + std::string(name_of(expected)));
  }
}

inline SortOutcome finish(std::vector<Element> output, Recorder& recorder) {
  return SortOutcome{std::move(output), recorder.counters(), recorder.take_trace()};
}

}  // namespace detail

inline SortOutcome expo_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::ExpoSort);
  if (run.input.size() > kExpoSortDefaultMaxN && !run.budget && !run.override_guard) {
    throw TooLarge("exposort refuses n = " + std::to_string(run.input.size()) + " > " +
                   std::to_string(kExpoSortDefaultMaxN) + " without a budget or override");
  }
  std::vector<Element> a = run.input;
  kernels::expo_sort<Recorder>(a, a.size(), recorder);
  return detail::finish(std::move(a), recorder);
}

inline SortOutcome cube_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::CubeSort);
  std::vector<Element> a = run.input;
  kernels::cube_sort<Recorder>(a, a.size(), recorder);
  return detail::finish(std::move(a), recorder);
}

inline SortOutcome insertion_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::InsertionSort);
  std::vector<Element> a = run.input;
  kernels::insertion_sort<Recorder>(a, recorder);
  return detail::finish(std::move(a), recorder);
}

/// n < 2 is answered by a single invocation with no comparison.
inline SortOutcome stooge_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::StoogeSort);
  std::vector<Element> a = run.input;
  if (a.size() < 2) {
    recorder.record_invocation();
  } else {
    kernels::stooge_sort<Recorder>(a, 0, a.size() - 1, recorder);
  }
  return detail::finish(std::move(a), recorder);
}

inline SortOutcome slow_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::SlowSort);
  std::vector<Element> a = run.input;
  kernels::slow_sort<Recorder>(a, 0, static_cast<std::ptrdiff_t>(a.size()) - 1, recorder);
  return detail::finish(std::move(a), recorder);
}

inline SortOutcome bogo_sort(const SortRun& run, Recorder& recorder) {
  detail::require_algorithm(run, AlgorithmId::BogoSort);
  std::vector<Element> a = run.input;
  Rng rng(run.seed);
  kernels::bogo_sort<Recorder>(a, rng, recorder);
  return detail::finish(std::move(a), recorder);
}

inline SortOutcome run_sort(const SortRun& run, Recorder& recorder) {
  switch (run.algorithm) {
    case AlgorithmId::ExpoSort: return expo_sort(run, recorder);
    case AlgorithmId::CubeSort: return cube_sort(run, recorder);
    case AlgorithmId::InsertionSort: return insertion_sort(run, recorder);
    case AlgorithmId::StoogeSort: return stooge_sort(run, recorder);
    case AlgorithmId::SlowSort: return slow_sort(run, recorder);
    case AlgorithmId::BogoSort: return bogo_sort(run, recorder);
  }
  throw std::logic_error("unreachable algorithm id");
}

/// Single entry point: builds a recorder from the run's budget and dispatches.
inline SortOutcome run_sort(const SortRun& run) {
  Recorder recorder(budget_for(run));
  return run_sort(run, recorder);
}

}  // namespace reluctant
