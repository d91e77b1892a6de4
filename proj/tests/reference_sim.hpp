// SPDX-License-Identifier: Apache-2.0
#pragma once

// Test-only transcription of the pseudocode in 1-based form (slot 0 unused).
// Shares nothing with the library kernels; used to freeze expected traces
// and counts.

#include <cstdint>
#include <utility>
#include <vector>

namespace reference {

struct Sim {
  std::vector<std::int64_t> A;  // A[1..n]
  std::uint64_t comparisons = 0;
  std::vector<std::size_t> lefts;

  explicit Sim(const std::vector<std::int64_t>& input) : A(input.size() + 1) {
    for (std::size_t i = 0; i < input.size(); ++i) A[i + 1] = input[i];
  }

  bool gt(std::size_t i, std::size_t j) {
    ++comparisons;
    return A[i] > A[j];
  }

  void swap_adjacent(std::size_t left) {
    lefts.push_back(left);
    std::swap(A[left], A[left + 1]);
  }

  void expo(std::size_t n) {
    if (n > 1) {
      expo(n - 1);
      if (gt(n - 1, n)) swap_adjacent(n - 1);
      expo(n - 1);
    }
  }

  void cube(std::size_t n) {
    if (n > 1) {
      cube(n - 1);
      if (gt(n - 1, n)) {
        swap_adjacent(n - 1);
        cube(n - 1);
      }
    }
  }

  void insertion(std::size_t n) {
    for (std::size_t j = 2; j <= n; ++j) {
      std::size_t i = j;
      while (i > 1 && gt(i - 1, i)) {
        swap_adjacent(i - 1);
        i = i - 1;
      }
    }
  }

  std::vector<std::int64_t> output() const { return {A.begin() + 1, A.end()}; }
};

enum class Which { Expo, Cube, Insertion };

inline Sim simulate(Which w, const std::vector<std::int64_t>& input) {
  Sim s(input);
  const std::size_t n = input.size();
  switch (w) {
    case Which::Expo: s.expo(n); break;
    case Which::Cube: s.cube(n); break;
    case Which::Insertion: s.insertion(n); break;
  }
  return s;
}

/// Brute-force pair counter, independent of the library oracle.
inline std::uint64_t count_inversions(const std::vector<std::int64_t>& a) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) c += a[i] > a[j] ? 1 : 0;
  return c;
}

}  // namespace reference
