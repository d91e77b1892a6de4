// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "reference_sim.hpp"
#include "reluctant/oracle.hpp"
#include "reluctant/sorts.hpp"

namespace reluctant {
namespace {

std::vector<std::size_t> lefts_of(const SwapTrace& t) {
  std::vector<std::size_t> out;
  for (const auto& e : t) out.push_back(e.left);
  return out;
}

SortOutcome sort_with(AlgorithmId id, std::vector<Element> input, std::uint64_t seed = 0) {
  SortRun run;
  run.algorithm = id;
  run.input = std::move(input);
  run.seed = seed;
  return run_sort(run);
}

std::vector<Element> iota_vec(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{1});
  return v;
}

std::vector<Element> reversed(std::size_t n) {
  auto v = iota_vec(n);
  std::reverse(v.begin(), v.end());
  return v;
}

// ExpoSort ------------------------------------------------------------------

TEST(ExpoSort, TrivialSizesDoNothing) {
  for (auto in : {std::vector<Element>{}, std::vector<Element>{42}}) {
    const auto out = sort_with(AlgorithmId::ExpoSort, in);
    EXPECT_EQ(out.output, in);
    EXPECT_EQ(out.counters.comparisons, 0u);
    EXPECT_EQ(out.counters.swaps, 0u);
    EXPECT_EQ(out.counters.invocations, 1u);
  }
}

TEST(ExpoSort, FourElementsCostSevenComparisonsOnEveryInput) {
  oracle::for_each_permutation(4, [](const std::vector<Element>& p) {
    EXPECT_EQ(sort_with(AlgorithmId::ExpoSort, p).counters.comparisons, 7u);
  });
}

TEST(ExpoSort, ReverseThree) {
  const auto out = sort_with(AlgorithmId::ExpoSort, {3, 2, 1});
  EXPECT_EQ(out.output, (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(out.counters.swaps, 3u);
  EXPECT_EQ(lefts_of(out.trace), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(ExpoSort, InvocationsAreTheFullCallTree) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(sort_with(AlgorithmId::ExpoSort, reversed(n)).counters.invocations,
              (Count{1} << n) - 1);
  }
}

TEST(ExpoSort, GuardRefusesLargeUnbudgetedInput) {
  SortRun run;
  run.algorithm = AlgorithmId::ExpoSort;
  run.input = reversed(kExpoSortDefaultMaxN + 1);
  EXPECT_THROW(run_sort(run), TooLarge);

  run.budget = 100;
  try {
    run_sort(run);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.counters().comparisons, 100u);
  }
}

TEST(ExpoSort, GuardOverrideRunsToCompletion) {
  SortRun run;
  run.algorithm = AlgorithmId::ExpoSort;
  run.input = reversed(kExpoSortDefaultMaxN + 1);
  run.override_guard = true;
  const auto out = run_sort(run);
  EXPECT_EQ(out.counters.comparisons, (Count{1} << kExpoSortDefaultMaxN) - 1);
  EXPECT_TRUE(oracle::is_sorted(out.output));
}

// CubeSort ------------------------------------------------------------------

TEST(CubeSort, SortedInputIsLinear) {
  const auto out = sort_with(AlgorithmId::CubeSort, {1, 2, 3, 4, 5});
  EXPECT_EQ(out.counters.comparisons, 4u);
  EXPECT_EQ(out.counters.swaps, 0u);
}

TEST(CubeSort, ReverseThree) {
  const auto out = sort_with(AlgorithmId::CubeSort, {3, 2, 1});
  EXPECT_EQ(out.output, (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(out.counters.comparisons, 3u);
  EXPECT_EQ(out.counters.swaps, 3u);
}

TEST(CubeSort, EmptyInput) {
  const auto out = sort_with(AlgorithmId::CubeSort, {});
  EXPECT_TRUE(out.output.empty());
  EXPECT_EQ(out.counters.comparisons, 0u);
}

TEST(CubeSort, FiveHundredReverseDoesNotOverflowTheStack) {
  const std::size_t n = 500;
  const auto out = sort_with(AlgorithmId::CubeSort, reversed(n));
  EXPECT_EQ(out.output, iota_vec(n));
  EXPECT_EQ(out.counters.comparisons, (n - 1) + Count{n} * (n - 1) * (n - 2) / 6);
}

// InsertionSort --------------------------------------------------------------

TEST(InsertionSort, SinglePair) {
  const auto out = sort_with(AlgorithmId::InsertionSort, {2, 1});
  EXPECT_EQ(out.counters.comparisons, 1u);
  EXPECT_EQ(out.counters.swaps, 1u);
  ASSERT_EQ(out.trace.size(), 1u);
  EXPECT_EQ(out.trace[0].left, 1u);
}

TEST(InsertionSort, SortedInputCostsOneComparisonPerElement) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto out = sort_with(AlgorithmId::InsertionSort, iota_vec(n));
    EXPECT_EQ(out.counters.comparisons, n - 1);
    EXPECT_EQ(out.counters.swaps, 0u);
  }
}

TEST(InsertionSort, ReverseThree) {
  const auto out = sort_with(AlgorithmId::InsertionSort, {3, 2, 1});
  EXPECT_EQ(lefts_of(out.trace), (std::vector<std::size_t>{1, 2, 1}));
}

// Kernels against the 1-based transcription ---------------------------------

TEST(Kernels, MatchReferenceSimulationOnAllSmallPermutations) {
  using reference::Which;
  const std::pair<AlgorithmId, Which> pairs[] = {{AlgorithmId::ExpoSort, Which::Expo},
                                                 {AlgorithmId::CubeSort, Which::Cube},
                                                 {AlgorithmId::InsertionSort, Which::Insertion}};
  for (std::size_t n = 0; n <= 6; ++n) {
    oracle::for_each_permutation(n, [&](const std::vector<Element>& p) {
      for (const auto& [id, which] : pairs) {
        const auto ref = reference::simulate(which, p);
        const auto out = sort_with(id, p);
        EXPECT_EQ(out.output, ref.output());
        EXPECT_EQ(out.counters.comparisons, ref.comparisons);
        EXPECT_EQ(lefts_of(out.trace), ref.lefts);
      }
    });
  }
}

// StoogeSort -----------------------------------------------------------------

TEST(StoogeSort, SinglePair) {
  const auto out = sort_with(AlgorithmId::StoogeSort, {2, 1});
  EXPECT_EQ(out.output, (std::vector<Element>{1, 2}));
  EXPECT_EQ(out.counters.comparisons, 1u);
  EXPECT_EQ(out.counters.swaps, 1u);
}

TEST(StoogeSort, SortedThree) {
  const auto out = sort_with(AlgorithmId::StoogeSort, {1, 2, 3});
  EXPECT_EQ(out.output, (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(out.counters.swaps, 0u);
}

// t(L) = 1 + 3 t(L - floor(L/3)), t(2) = 1, evaluated offline:
// t(3)=4, t(4)=13, t(6)=40, t(8)=121, t(12)=364, t(18)=1093, t(27)=3280.
TEST(StoogeSort, Reverse27GoldenCount) {
  const auto out = sort_with(AlgorithmId::StoogeSort, reversed(27));
  EXPECT_EQ(out.output, iota_vec(27));
  EXPECT_EQ(out.counters.comparisons, 3280u);
}

TEST(StoogeSort, SwapsAreNotAdjacentInGeneral) {
  const auto out = sort_with(AlgorithmId::StoogeSort, {3, 2, 1});
  ASSERT_FALSE(out.trace.empty());
  EXPECT_EQ(out.trace[0].left, 1u);
  EXPECT_EQ(out.trace[0].right, 3u);
}

// SlowSort -------------------------------------------------------------------

TEST(SlowSort, SinglePair) {
  const auto out = sort_with(AlgorithmId::SlowSort, {2, 1});
  EXPECT_EQ(out.counters.comparisons, 1u);
  EXPECT_EQ(out.counters.swaps, 1u);
}

// c(L) = c(ceil(L/2)) + c(floor(L/2)) + 1 + c(L-1): c(2)=1, c(3)=3, c(4)=6.
TEST(SlowSort, SortedFourMatchesRecurrence) {
  const auto out = sort_with(AlgorithmId::SlowSort, {1, 2, 3, 4});
  EXPECT_EQ(out.counters.swaps, 0u);
  EXPECT_EQ(out.counters.comparisons, 6u);
}

TEST(SlowSort, CheaperThanExpoSortFromEightToTwentyTwo) {
  for (std::size_t n = 8; n <= 22; ++n) {
    const Count slow = sort_with(AlgorithmId::SlowSort, reversed(n)).counters.comparisons;
    EXPECT_LT(slow, (Count{1} << (n - 1)) - 1) << "n=" << n;
  }
}

// BogoSort -------------------------------------------------------------------

TEST(BogoSort, SortedAndSingletonInputsNeverShuffle) {
  EXPECT_EQ(sort_with(AlgorithmId::BogoSort, {1, 2, 3, 4}, 9).counters.shuffles, 0u);
  EXPECT_EQ(sort_with(AlgorithmId::BogoSort, {7}, 9).counters.shuffles, 0u);
}

TEST(BogoSort, MeanShufflesAtFiveIsNearOneHundredTwenty) {
  Count total = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const auto out = sort_with(AlgorithmId::BogoSort, {5, 4, 3, 2, 1}, t);
    EXPECT_TRUE(oracle::is_sorted(out.output));
    EXPECT_TRUE(out.trace.empty());
    total += out.counters.shuffles;
  }
  const double mean = static_cast<double>(total) / 500.0;
  EXPECT_GE(mean, 90.0);
  EXPECT_LE(mean, 150.0);
}

TEST(BogoSort, SeedDeterminesTheRun) {
  const auto a = sort_with(AlgorithmId::BogoSort, {4, 1, 3, 2}, 42);
  const auto b = sort_with(AlgorithmId::BogoSort, {4, 1, 3, 2}, 42);
  EXPECT_EQ(a.counters, b.counters);
}

TEST(BogoSort, BudgetCapsShuffles) {
  SortRun run;
  run.algorithm = AlgorithmId::BogoSort;
  run.input = reversed(8);
  run.budget = 3;
  try {
    run_sort(run);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.counters().shuffles, 3u);
  }
}

// Dispatch -------------------------------------------------------------------

TEST(RunSort, Examples) {
  EXPECT_EQ(sort_with(AlgorithmId::ExpoSort, {2, 1}).output, (std::vector<Element>{1, 2}));
  EXPECT_TRUE(sort_with(AlgorithmId::CubeSort, {}).output.empty());
  const std::vector<Element> in{5, 1, 4, 2, 3};
  const auto out = sort_with(AlgorithmId::InsertionSort, in);
  EXPECT_EQ(out.output, (std::vector<Element>{1, 2, 3, 4, 5}));
  EXPECT_EQ(reference::count_inversions(in), 6u);
  EXPECT_EQ(out.counters.swaps, 6u);
}

TEST(RunSort, OperationRejectsAMismatchedRun) {
  SortRun run;
  run.algorithm = AlgorithmId::CubeSort;
  Recorder rec;
  EXPECT_THROW(expo_sort(run, rec), std::invalid_argument);
}

TEST(RunSort, ZeroBudgetIsRejected) {
  SortRun run;
  run.algorithm = AlgorithmId::InsertionSort;
  run.budget = 0;
  EXPECT_THROW(run_sort(run), std::invalid_argument);
}

TEST(RunSort, EqualElementsNeverSwap) {
  for (AlgorithmId id : kAllAlgorithms) {
    const auto out = sort_with(id, {2, 2, 1, 1, 2, 1}, 3);
    EXPECT_TRUE(oracle::is_sorted(out.output)) << name_of(id);
    for (const auto& e : out.trace) EXPECT_GT(e.larger, e.smaller) << name_of(id);
  }
}

TEST(RunSort, HandlesNegativeAndExtremeValues) {
  const std::vector<Element> in{INT64_MAX, -3, INT64_MIN, 0, -3};
  for (AlgorithmId id : kAllAlgorithms) {
    const auto out = sort_with(id, in, 5);
    EXPECT_TRUE(oracle::is_sorted(out.output)) << name_of(id);
    EXPECT_TRUE(oracle::is_permutation_of(out.output, in)) << name_of(id);
  }
}

}  // namespace
}  // namespace reluctant
