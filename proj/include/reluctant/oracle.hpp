// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force ground truth. Nothing here calls into the sort kernels; every
// figure is computed by direct enumeration or by evaluating a count
// recurrence, so it can be compared against instrumented runs.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reluctant/instrumentation.hpp"
#include "reluctant/types.hpp"

namespace reluctant::oracle {

inline constexpr std::size_t kMaxPermutationN = 10;

/// O(n^2) pair scan.
inline Count inversion_count(std::span<const Element> a) {
  Count inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j]) ++inv;
    }
  }
  return inv;
}

inline bool is_sorted(std::span<const Element> a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i - 1] > a[i]) return false;
  }
  return true;
}

/// Multiset equality.
inline bool is_permutation_of(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> x(a.begin(), a.end());
  std::vector<Element> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

/// Calls `fn` once for each of the n! orderings of {1..n}, lexicographically.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  if (n > kMaxPermutationN) {
    throw TooLarge("permutations: n = " + std::to_string(n) + " exceeds " +
                   std::to_string(kMaxPermutationN));
  }
  std::vector<Element> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<Element>(i + 1);
  do {
    fn(std::as_const(a));
  } while (std::next_permutation(a.begin(), a.end()));
}

inline std::vector<std::vector<Element>> permutations(std::size_t n) {
  std::vector<std::vector<Element>> out;
  for_each_permutation(n, [&](const std::vector<Element>& p) { out.push_back(p); });
  return out;
}

/// Calls `fn` for each of the k^n sequences of length n over {1..k}.
template <class Fn>
void for_each_word(std::size_t n, Element k, Fn&& fn) {
  if (k < 1) throw std::invalid_argument("alphabet must be non-empty");
  std::vector<Element> a(n, 1);
  for (;;) {
    fn(std::as_const(a));
    std::size_t i = n;
    while (i > 0 && a[i - 1] == k) {
      a[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
    ++a[i - 1];
  }
}

/// Equal length and element-wise equal positions and values; step numbers
/// are ignored.
inline bool traces_equal(const SwapTrace& t1, const SwapTrace& t2) {
  return std::equal(t1.begin(), t1.end(), t2.begin(), t2.end(),
                    [](const SwapEvent& x, const SwapEvent& y) {
                      return x.left == y.left && x.right == y.right && x.larger == y.larger &&
                             x.smaller == y.smaller;
                    });
}

enum class CountCase { Sorted, Reverse, WorstKnown };

inline constexpr std::size_t kMaxCountTableN = 100'000;
inline constexpr std::size_t kMaxExpoCountTableN = 64;

namespace detail {

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw TooLarge("count_table: count overflows 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw TooLarge("count_table: count overflows 64 bits");
  return r;
}

}  // namespace detail

/// Exact comparison counts for n = 1..n_max by recurrence evaluation.
///
///   ExpoSort (any input)       e(n)  = 2 e(n-1) + 1
///   CubeSort sorted            f1(n) = f1(n-1) + 1
///   CubeSort, minimum last     f2(n) = f1(n-1) + 1 + f2(n-1)
///   CubeSort reverse           f3(n) = f3(n-1) + 1 + f2(n-1)
///   InsertionSort sorted       s(n)  = s(n-1) + 1
///   InsertionSort reverse      r(n)  = r(n-1) + (n-1)
///   StoogeSort (any input)     t(L)  = 1 + 3 t(L - floor(L/3)),  t(2) = 1
///   SlowSort (any input)       c(L)  = c(ceil(L/2)) + c(floor(L/2)) + 1 + c(L-1)
///
/// All start from 0 at n = 1. WorstKnown is reverse-sorted input.
inline std::vector<std::pair<std::size_t, Count>> count_table(AlgorithmId alg, CountCase which,
                                                              std::size_t n_max) {
  using detail::checked_add;
  using detail::checked_mul;
  const std::size_t cap =
      alg == AlgorithmId::ExpoSort ? kMaxExpoCountTableN : kMaxCountTableN;
  if (n_max > cap) {
    throw TooLarge("count_table: n_max = " + std::to_string(n_max) + " exceeds " +
                   std::to_string(cap) + " for " + std::string(name_of(alg)));
  }
  const bool sorted = which == CountCase::Sorted;

  // f[L] for L = 0..n_max; index 0 is a placeholder.
  std::vector<Count> f(n_max + 1, 0);
  switch (alg) {
    case AlgorithmId::ExpoSort:
      for (std::size_t n = 2; n <= n_max; ++n) f[n] = checked_add(checked_mul(2, f[n - 1]), 1);
      break;
    case AlgorithmId::CubeSort: {
      std::vector<Count> f1(n_max + 1, 0), f2(n_max + 1, 0);
      for (std::size_t n = 2; n <= n_max; ++n) {
        f1[n] = f1[n - 1] + 1;
        f2[n] = checked_add(checked_add(f1[n - 1], 1), f2[n - 1]);
        f[n] = sorted ? f1[n] : checked_add(checked_add(f[n - 1], 1), f2[n - 1]);
      }
      break;
    }
    case AlgorithmId::InsertionSort:
      for (std::size_t n = 2; n <= n_max; ++n) {
        f[n] = sorted ? f[n - 1] + 1 : checked_add(f[n - 1], n - 1);
      }
      break;
    case AlgorithmId::StoogeSort:
      for (std::size_t n = 2; n <= n_max; ++n) {
        f[n] = n == 2 ? 1 : checked_add(1, checked_mul(3, f[n - n / 3]));
      }
      break;
    case AlgorithmId::SlowSort:
      for (std::size_t n = 2; n <= n_max; ++n) {
        f[n] = checked_add(checked_add(f[(n + 1) / 2], f[n / 2]), checked_add(1, f[n - 1]));
      }
      break;
    case AlgorithmId::BogoSort:
      throw std::invalid_argument("count_table: bogosort has no deterministic count");
  }

  std::vector<std::pair<std::size_t, Count>> table;
  table.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) table.emplace_back(n, f[n]);
  return table;
}

}  // namespace reluctant::oracle
