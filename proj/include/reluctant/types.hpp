// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reluctant {

/// Sort key. Ordering is the built-in strict `>` on 64-bit signed integers.
using Element = std::int64_t;
using Count = std::uint64_t;

enum class AlgorithmId {
  ExpoSort,
  CubeSort,
  InsertionSort,
  StoogeSort,
  SlowSort,
  BogoSort,
};

inline constexpr std::array<AlgorithmId, 6> kAllAlgorithms = {
    AlgorithmId::ExpoSort,   AlgorithmId::CubeSort, AlgorithmId::InsertionSort,
    AlgorithmId::StoogeSort, AlgorithmId::SlowSort, AlgorithmId::BogoSort,
};

/// The three algorithms that only ever swap adjacent out-of-order pairs.
inline constexpr std::array<AlgorithmId, 3> kAdjacentSwapAlgorithms = {
    AlgorithmId::ExpoSort, AlgorithmId::CubeSort, AlgorithmId::InsertionSort};

constexpr std::string_view name_of(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::ExpoSort: return "exposort";
    case AlgorithmId::CubeSort: return "cubesort";
    case AlgorithmId::InsertionSort: return "insertionsort";
    case AlgorithmId::StoogeSort: return "stoogesort";
    case AlgorithmId::SlowSort: return "slowsort";
    case AlgorithmId::BogoSort: return "bogosort";
  }
  return "?";
}

/// Case-sensitive lookup of the lowercase CLI spelling.
inline std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (AlgorithmId id : kAllAlgorithms) {
    if (name_of(id) == name) return id;
  }
  return std::nullopt;
}

// Errors ---------------------------------------------------------------------

/// Raised when a size guard refuses a request (oversized enumeration, or an
/// unbudgeted ExpoSort beyond the default limit).
class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A swap trace does not match the array it is replayed against.
class InconsistentTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series handed to the growth fitter cannot support a fit.
class DegenerateSeries : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (element lists, CSV).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reluctant
