// SPDX-License-Identifier: Apache-2.0
#pragma once

// Property suites run by `reluctant verify`. Each suite checks instrumented
// runs against the brute-force oracle. The sorts are looked up through a
// SortTable so a suite can be pointed at a modified implementation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reluctant/instrumentation.hpp"
#include "reluctant/oracle.hpp"
#include "reluctant/random.hpp"
#include "reluctant/sorts.hpp"
#include "reluctant/types.hpp"

namespace reluctant::verify {

using SortFn = std::function<SortOutcome(const SortRun&)>;

class SortTable {
 public:
  static SortTable standard() {
    SortTable t;
    for (AlgorithmId id : kAllAlgorithms) {
      t.fns_[index(id)] = [](const SortRun& run) { return run_sort(run); };
    }
    return t;
  }

  SortTable with(AlgorithmId id, SortFn fn) const {
    SortTable t = *this;
    t.fns_[index(id)] = std::move(fn);
    return t;
  }

  SortOutcome run(AlgorithmId id, std::vector<Element> input, std::uint64_t seed = 0,
                  std::optional<Count> budget = std::nullopt) const {
    SortRun r;
    r.algorithm = id;
    r.input = std::move(input);
    r.seed = seed;
    r.budget = budget;
    return fns_[index(id)](r);
  }

 private:
  static std::size_t index(AlgorithmId id) { return static_cast<std::size_t>(id); }
  std::array<SortFn, kAllAlgorithms.size()> fns_;
};

struct VerifyOptions {
  std::size_t max_n = 8;
  /// Words over {1..alphabet} of length <= min(max_n, multiset_max_n).
  std::size_t multiset_max_n = 6;
  Element alphabet = 3;
  std::size_t random_trials = 1000;
  std::size_t random_max_n = 64;
  std::size_t expo_random_max_n = 20;
  std::size_t bogo_random_max_n = 7;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  bool passed = true;
  Count cases = 0;
  std::string note;
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    if (failures.size() < 5) failures.push_back(std::move(message));
  }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });
  }
};

inline std::string to_string(std::span<const Element> a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ']';
  return os.str();
}

namespace detail {

inline std::size_t multiset_n(const VerifyOptions& opt) {
  return std::min(opt.max_n, opt.multiset_max_n);
}

/// All permutations of {1..n} for n in [n_from, max_n], then all words.
template <class Fn>
void for_each_small_input(const VerifyOptions& opt, std::size_t n_from, Fn&& fn) {
  for (std::size_t n = n_from; n <= opt.max_n; ++n) oracle::for_each_permutation(n, fn);
  for (std::size_t n = std::max<std::size_t>(n_from, 1); n <= multiset_n(opt); ++n) {
    oracle::for_each_word(n, opt.alphabet, fn);
  }
}

inline std::size_t random_cap(AlgorithmId id, const VerifyOptions& opt) {
  switch (id) {
    case AlgorithmId::ExpoSort: return std::min(opt.random_max_n, opt.expo_random_max_n);
    case AlgorithmId::BogoSort: return std::min(opt.random_max_n, opt.bogo_random_max_n);
    default: return opt.random_max_n;
  }
}

/// Random input for trial t: length uniform in [0, cap], values in
/// [-cap, cap] so duplicates and negatives occur.
inline std::vector<Element> random_input(std::uint64_t seed, std::size_t t, std::size_t cap) {
  Rng rng = derived_rng(seed, 0x5eed, t);
  const auto n = static_cast<std::size_t>(uniform_below(rng, cap + 1));
  std::vector<Element> a(n);
  const auto span = static_cast<std::uint64_t>(2 * cap + 1);
  for (auto& x : a) x = static_cast<Element>(uniform_below(rng, span)) - static_cast<Element>(cap);
  return a;
}

inline void check_contract(SuiteResult& s, AlgorithmId id, std::span<const Element> input,
                           const SortOutcome& out) {
  ++s.cases;
  const std::string where = std::string(name_of(id)) + " on " + to_string(input);
  if (!oracle::is_sorted(out.output)) s.fail(where + ": output not sorted");
  if (!oracle::is_permutation_of(out.output, input)) s.fail(where + ": output not a permutation");
  if (out.trace.size() != out.counters.swaps) s.fail(where + ": |trace| != swaps");
  for (std::size_t i = 0; i < out.trace.size(); ++i) {
    if (out.trace[i].step != i + 1) {
      s.fail(where + ": trace steps are not consecutive");
      break;
    }
  }
  if (id == AlgorithmId::BogoSort) return;
  if (out.counters.shuffles != 0) s.fail(where + ": shuffles recorded");
  try {
    if (replay(out.trace, input) != out.output) s.fail(where + ": replay does not give output");
  } catch (const InconsistentTrace& e) {
    s.fail(where + ": " + e.what());
  }
}

}  // namespace detail

/// Sorted, multiset-preserving output with a trace that replays to it, for
/// every algorithm on every small input and on seeded random inputs.
inline SuiteResult sortedness(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"sortedness"};
  for (AlgorithmId id : kAllAlgorithms) {
    std::uint64_t k = 0;
    detail::for_each_small_input(opt, 0, [&](const std::vector<Element>& in) {
      detail::check_contract(s, id, in, sorts.run(id, in, derived_seed(opt.seed, 1, k++)));
    });
    const std::size_t cap = detail::random_cap(id, opt);
    for (std::size_t t = 0; t < opt.random_trials; ++t) {
      const auto in = detail::random_input(opt.seed, t, cap);
      detail::check_contract(s, id, in, sorts.run(id, in, derived_seed(opt.seed, 2, t)));
    }
  }
  return s;
}

/// Exact comparison counts: ExpoSort 2^(n-1)-1 on every input, CubeSort n-1
/// on sorted input and (n-1)+C(n,3) on reverse input, and no permutation
/// costing CubeSort more than the reverse-sorted one.
inline SuiteResult count_laws(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"count-laws"};
  auto expect = [&](AlgorithmId id, std::span<const Element> in, Count got, Count want,
                    const char* what) {
    ++s.cases;
    if (got != want) {
      s.fail(std::string(name_of(id)) + " on " + to_string(in) + ": " + what + " = " +
             std::to_string(got) + ", expected " + std::to_string(want));
    }
  };

  detail::for_each_small_input(opt, 1, [&](const std::vector<Element>& in) {
    const Count n = in.size();
    const auto out = sorts.run(AlgorithmId::ExpoSort, in);
    expect(AlgorithmId::ExpoSort, in, out.counters.comparisons, (Count{1} << (n - 1)) - 1,
           "comparisons");
    expect(AlgorithmId::ExpoSort, in, out.counters.invocations, (Count{1} << n) - 1,
           "invocations");
  });

  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    std::vector<Element> up(n), down(n);
    for (std::size_t i = 0; i < n; ++i) {
      up[i] = static_cast<Element>(i + 1);
      down[i] = static_cast<Element>(n - i);
    }
    const Count c3 = n < 3 ? 0 : Count{n} * (n - 1) * (n - 2) / 6;
    expect(AlgorithmId::CubeSort, up, sorts.run(AlgorithmId::CubeSort, up).counters.comparisons,
           n - 1, "comparisons");
    const Count worst = sorts.run(AlgorithmId::CubeSort, down).counters.comparisons;
    expect(AlgorithmId::CubeSort, down, worst, (n - 1) + c3, "comparisons");
    expect(AlgorithmId::InsertionSort, up,
           sorts.run(AlgorithmId::InsertionSort, up).counters.comparisons, n - 1, "comparisons");

    oracle::for_each_permutation(n, [&](const std::vector<Element>& p) {
      ++s.cases;
      const Count c = sorts.run(AlgorithmId::CubeSort, p).counters.comparisons;
      if (c > worst) {
        s.fail("cubesort on " + to_string(p) + ": " + std::to_string(c) +
               " comparisons exceeds the reverse-sorted " + std::to_string(worst));
      }
    });
  }
  return s;
}

/// ExpoSort, CubeSort and InsertionSort emit identical swap sequences.
inline SuiteResult trace_equivalence(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"trace-equivalence"};
  Count perms = 0, words = 0;
  auto check = [&](const std::vector<Element>& in) {
    ++s.cases;
    const auto ins = sorts.run(AlgorithmId::InsertionSort, in).trace;
    const auto expo = sorts.run(AlgorithmId::ExpoSort, in).trace;
    const auto cube = sorts.run(AlgorithmId::CubeSort, in).trace;
    if (!oracle::traces_equal(expo, ins)) s.fail("exposort trace differs on " + to_string(in));
    if (!oracle::traces_equal(cube, ins)) s.fail("cubesort trace differs on " + to_string(in));
  };
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    oracle::for_each_permutation(n, [&](const std::vector<Element>& p) {
      ++perms;
      check(p);
    });
  }
  for (std::size_t n = 1; n <= detail::multiset_n(opt); ++n) {
    oracle::for_each_word(n, opt.alphabet, [&](const std::vector<Element>& w) {
      ++words;
      check(w);
    });
  }
  s.note = "permutations=" + std::to_string(perms) + " multisets=" + std::to_string(words);
  return s;
}

/// For the adjacent-swap sorts: swaps equal the inversion count, each
/// replayed event removes exactly one inversion, and equal values never swap.
inline SuiteResult monotone_progress(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"monotone-progress"};
  auto check = [&](AlgorithmId id, const std::vector<Element>& in) {
    ++s.cases;
    const std::string where = std::string(name_of(id)) + " on " + to_string(in);
    const auto out = sorts.run(id, in);
    Count inv = oracle::inversion_count(in);
    if (out.counters.swaps != inv) {
      s.fail(where + ": swaps " + std::to_string(out.counters.swaps) + " != inversions " +
             std::to_string(inv));
    }
    if (out.counters.swaps > out.counters.comparisons) s.fail(where + ": swaps > comparisons");
    std::vector<Element> a = in;
    for (const SwapEvent& e : out.trace) {
      if (!e.adjacent() || e.right > a.size()) {
        s.fail(where + ": non-adjacent or out-of-range event");
        return;
      }
      if (e.larger == e.smaller || a[e.left - 1] == a[e.right - 1]) {
        s.fail(where + ": swap between equal elements");
      }
      std::swap(a[e.left - 1], a[e.right - 1]);
      const Count after = oracle::inversion_count(a);
      if (after + 1 != inv) {
        s.fail(where + ": event " + std::to_string(e.step) + " changed inversions by " +
               std::to_string(static_cast<long long>(inv) - static_cast<long long>(after)));
      }
      inv = after;
    }
  };
  for (AlgorithmId id : kAdjacentSwapAlgorithms) {
    detail::for_each_small_input(opt, 0, [&](const std::vector<Element>& in) { check(id, in); });
    const std::size_t cap = detail::random_cap(id, opt);
    for (std::size_t t = 0; t < opt.random_trials; ++t) {
      check(id, detail::random_input(opt.seed, t, cap));
    }
  }
  return s;
}

/// Instrumented counts equal the recurrence tables for every deterministic
/// algorithm and case, n = 1..2*max_n.
inline SuiteResult oracle_agreement(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"oracle-agreement"};
  const std::size_t n_max = std::max<std::size_t>(2 * opt.max_n, 2);
  for (AlgorithmId id : kAllAlgorithms) {
    if (id == AlgorithmId::BogoSort) continue;
    for (auto which : {oracle::CountCase::Sorted, oracle::CountCase::Reverse,
                       oracle::CountCase::WorstKnown}) {
      for (const auto& [n, want] : oracle::count_table(id, which, n_max)) {
        ++s.cases;
        std::vector<Element> in(n);
        for (std::size_t i = 0; i < n; ++i) {
          in[i] = static_cast<Element>(which == oracle::CountCase::Sorted ? i + 1 : n - i);
        }
        const Count got = sorts.run(id, in).counters.comparisons;
        if (got != want) {
          s.fail(std::string(name_of(id)) + " n=" + std::to_string(n) + ": instrumented " +
                 std::to_string(got) + " != table " + std::to_string(want));
        }
      }
    }
  }
  return s;
}

/// No run reports more comparisons (shuffles for BogoSort) than its budget,
/// and an exceeded budget stops exactly at the limit.
inline SuiteResult budget_safety(const VerifyOptions& opt, const SortTable& sorts) {
  SuiteResult s{"budget-safety"};
  const std::size_t n = std::min<std::size_t>(opt.max_n, 6);
  std::vector<Element> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = static_cast<Element>(n - i);
  for (AlgorithmId id : kAllAlgorithms) {
    const bool bogo = id == AlgorithmId::BogoSort;
    const std::uint64_t seed = derived_seed(opt.seed, 3, 0);
    const auto full = sorts.run(id, in, seed).counters;
    const Count total = bogo ? full.shuffles : full.comparisons;
    for (Count b = 1; b <= total + 1; ++b) {
      ++s.cases;
      const std::string where =
          std::string(name_of(id)) + " budget " + std::to_string(b);
      try {
        const auto c = sorts.run(id, in, seed, b).counters;
        if ((bogo ? c.shuffles : c.comparisons) > b) s.fail(where + ": over budget");
        if (b < total) s.fail(where + ": completed under a budget below its full cost");
      } catch (const BudgetExceeded& e) {
        const Count used = bogo ? e.counters().shuffles : e.counters().comparisons;
        if (used != b) s.fail(where + ": stopped at " + std::to_string(used));
        if (b >= total) s.fail(where + ": stopped although the budget suffices");
      }
    }
  }
  return s;
}

inline VerifyReport verify_all(const VerifyOptions& opt,
                               const SortTable& sorts = SortTable::standard()) {
  VerifyReport r;
  r.suites.push_back(sortedness(opt, sorts));
  r.suites.push_back(count_laws(opt, sorts));
  r.suites.push_back(trace_equivalence(opt, sorts));
  r.suites.push_back(monotone_progress(opt, sorts));
  r.suites.push_back(oracle_agreement(opt, sorts));
  r.suites.push_back(budget_safety(opt, sorts));
  return r;
}

}  // namespace reluctant::verify
