// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reluctant/types.hpp"

namespace reluctant {

/// Exact operation tallies for one run.
///
/// The cost model counts one comparison per evaluation of an
/// element-vs-element guard. Loop bookkeeping, index arithmetic and the
/// `n > 1` size tests are not counted. `invocations` counts every procedure
/// entry, base cases included.
struct CounterSet {
  Count comparisons = 0;
  Count swaps = 0;
  Count invocations = 0;
  Count shuffles = 0;

  friend bool operator==(const CounterSet&, const CounterSet&) = default;
};

/// One exchange of two array slots. Positions are 1-based. `larger` and
/// `smaller` are the values at `left` and `right` before the exchange.
///
/// ExpoSort, CubeSort and InsertionSort only produce adjacent events
/// (`right == left + 1`); StoogeSort and SlowSort exchange distant slots.
struct SwapEvent {
  Count step = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  Element larger = 0;
  Element smaller = 0;

  bool adjacent() const { return right == left + 1; }

  friend bool operator==(const SwapEvent&, const SwapEvent&) = default;
};

using SwapTrace = std::vector<SwapEvent>;

struct Budget {
  std::optional<Count> max_comparisons;
  std::optional<Count> max_shuffles;
};

/// Thrown when a run would exceed its budget. Carries the counters as they
/// stood at the stop point; the array state is deliberately not reported.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const CounterSet& counters)
      : std::runtime_error("budget exceeded"), counters_(counters) {}

  const CounterSet& counters() const noexcept { return counters_; }

 private:
  CounterSet counters_;
};

/// Instrumentation sink owned by exactly one run.
class Recorder {
 public:
  Recorder() = default;
  explicit Recorder(Budget budget) : budget_(budget) {
    if ((budget_.max_comparisons && *budget_.max_comparisons == 0) ||
        (budget_.max_shuffles && *budget_.max_shuffles == 0)) {
      throw std::invalid_argument("budget limits must be >= 1");
    }
  }

  void record_invocation() { ++counters_.invocations; }

  /// Counts one comparison, refusing the one that would pass the budget.
  void record_comparison() {
    if (budget_.max_comparisons && counters_.comparisons >= *budget_.max_comparisons) {
      throw BudgetExceeded(counters_);
    }
    ++counters_.comparisons;
  }

  /// Counted strict `a > b`.
  bool greater(Element a, Element b) {
    record_comparison();
    return a > b;
  }

  /// `left` and `right` are 1-based; `larger > smaller` is a precondition.
  void record_swap(std::size_t left, std::size_t right, Element larger, Element smaller) {
    if (!(larger > smaller)) {
      throw std::logic_error("record_swap: pair is not strictly out of order");
    }
    if (left == 0 || right <= left) {
      throw std::logic_error("record_swap: invalid positions");
    }
    ++counters_.swaps;
    trace_.push_back(SwapEvent{counters_.swaps, left, right, larger, smaller});
  }

  void record_adjacent_swap(std::size_t left, Element larger, Element smaller) {
    record_swap(left, left + 1, larger, smaller);
  }

  void record_shuffle() {
    if (budget_.max_shuffles && counters_.shuffles >= *budget_.max_shuffles) {
      throw BudgetExceeded(counters_);
    }
    ++counters_.shuffles;
  }

  const CounterSet& counters() const noexcept { return counters_; }
  const SwapTrace& trace() const noexcept { return trace_; }
  const Budget& budget() const noexcept { return budget_; }

  SwapTrace take_trace() { return std::exchange(trace_, {}); }

 private:
  Budget budget_;
  CounterSet counters_;
  SwapTrace trace_;
};

/// Applies every event of `trace` to a copy of `input`, checking that each
/// exchanged pair held exactly the recorded values and was strictly out of
/// order.
inline std::vector<Element> replay(const SwapTrace& trace, std::span<const Element> input) {
  std::vector<Element> a(input.begin(), input.end());
  for (const SwapEvent& e : trace) {
    if (e.left == 0 || e.right <= e.left || e.right > a.size()) {
      throw InconsistentTrace("event " + std::to_string(e.step) + ": position out of range");
    }
    Element& lhs = a[e.left - 1];
    Element& rhs = a[e.right - 1];
    if (lhs != e.larger || rhs != e.smaller) {
      throw InconsistentTrace("event " + std::to_string(e.step) +
                              ": recorded values do not match the array");
    }
    if (!(lhs > rhs)) {
      throw InconsistentTrace("event " + std::to_string(e.step) + ": pair was not out of order");
    }
    std::swap(lhs, rhs);
  }
  return a;
}

}  // namespace reluctant
