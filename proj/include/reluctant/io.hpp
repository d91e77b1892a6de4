// SPDX-License-Identifier: Apache-2.0
#pragma once

// Stable machine-readable formats: element input, trace JSON, bench CSV and
// FitReport JSON.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "reluctant/growth.hpp"
#include "reluctant/instrumentation.hpp"
#include "reluctant/sorts.hpp"
#include "reluctant/types.hpp"

namespace reluctant::io {

using Json = nlohmann::ordered_json;

inline std::int64_t parse_int64(std::string_view token, std::string_view what) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("not a 64-bit integer " + std::string(what) + ": '" + std::string(token) +
                     "'");
  }
  return v;
}

/// Whitespace-separated 64-bit signed integers.
inline std::vector<Element> parse_elements(std::istream& in) {
  std::vector<Element> out;
  std::string token;
  while (in >> token) out.push_back(parse_int64(token, "element"));
  return out;
}

inline Json counters_json(const CounterSet& c) {
  return Json{{"comparisons", c.comparisons},
              {"swaps", c.swaps},
              {"invocations", c.invocations},
              {"shuffles", c.shuffles}};
}

/// Non-adjacent events (StoogeSort, SlowSort) carry an extra "right" key.
inline Json event_json(const SwapEvent& e) {
  Json j{{"step", e.step}, {"left", e.left}};
  if (!e.adjacent()) j["right"] = e.right;
  j["larger"] = e.larger;
  j["smaller"] = e.smaller;
  return j;
}

inline Json seed_json(std::optional<std::uint64_t> seed) {
  return seed ? Json(*seed) : Json(nullptr);
}

/// Trace document. With `output` set, an "output" array follows "input".
inline Json trace_json(AlgorithmId alg, std::optional<std::uint64_t> seed,
                       std::span<const Element> input, const SortOutcome& outcome,
                       bool with_output) {
  Json j;
  j["algorithm"] = name_of(alg);
  j["n"] = input.size();
  j["seed"] = seed_json(seed);
  j["input"] = std::vector<Element>(input.begin(), input.end());
  if (with_output) j["output"] = outcome.output;
  Json events = Json::array();
  for (const SwapEvent& e : outcome.trace) events.push_back(event_json(e));
  j["events"] = std::move(events);
  j["counters"] = counters_json(outcome.counters);
  return j;
}

inline Json budget_exceeded_json(AlgorithmId alg, std::optional<std::uint64_t> seed,
                                 std::span<const Element> input, const CounterSet& counters) {
  Json j;
  j["error"] = "BudgetExceeded";
  j["algorithm"] = name_of(alg);
  j["n"] = input.size();
  j["seed"] = seed_json(seed);
  j["input"] = std::vector<Element>(input.begin(), input.end());
  j["counters"] = counters_json(counters);
  return j;
}

inline Json count_json(double v) {
  if (std::nearbyint(v) == v && std::fabs(v) < 9.0e15) return Json(static_cast<std::int64_t>(v));
  return Json(v);
}

inline Json fit_report_json(const growth::FitReport& report) {
  Json series = Json::array();
  for (const auto& p : report.series) series.push_back(Json::array({p.n, count_json(p.count)}));
  Json models = Json::object();
  for (const auto& mf : report.models) {
    models[std::string(growth::name_of(mf.model))] =
        Json{{"slope", mf.slope}, {"intercept", mf.intercept}, {"rss", mf.rss}};
  }
  Json j;
  j["series"] = std::move(series);
  j["models"] = std::move(models);
  j["selected"] = growth::name_of(report.selected);
  return j;
}

// Bench CSV --------------------------------------------------------------------

inline constexpr std::string_view kBenchHeader =
    "algorithm,n,case,trial,comparisons,swaps,invocations,shuffles,elapsed_ns";

enum class BenchCase { Sorted, Reverse, Random };

constexpr std::string_view name_of(BenchCase c) {
  switch (c) {
    case BenchCase::Sorted: return "sorted";
    case BenchCase::Reverse: return "reverse";
    case BenchCase::Random: return "random";
  }
  return "?";
}

inline std::optional<BenchCase> parse_bench_case(std::string_view s) {
  for (BenchCase c : {BenchCase::Sorted, BenchCase::Reverse, BenchCase::Random}) {
    if (name_of(c) == s) return c;
  }
  return std::nullopt;
}

struct BenchRow {
  AlgorithmId algorithm = AlgorithmId::InsertionSort;
  std::size_t n = 0;
  BenchCase bench_case = BenchCase::Sorted;
  std::size_t trial = 0;
  CounterSet counters;
  std::uint64_t elapsed_ns = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << name_of(r.algorithm) << ',' << r.n << ',' << name_of(r.bench_case) << ',' << r.trial
      << ',' << r.counters.comparisons << ',' << r.counters.swaps << ','
      << r.counters.invocations << ',' << r.counters.shuffles << ',' << r.elapsed_ns << '\n';
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Counters span the full unsigned range.
inline std::uint64_t parse_count(std::string_view token, std::string_view what) {
  std::uint64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("not a non-negative integer " + std::string(what) + ": '" +
                     std::string(token) + "'");
  }
  return v;
}

/// Parses a bench CSV; the header must match exactly.
inline std::vector<BenchRow> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchHeader) throw ParseError("unexpected CSV header: '" + line + "'");
  std::vector<BenchRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != 9) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 9 columns, got " +
                       std::to_string(cells.size()));
    }
    BenchRow r;
    const auto alg = parse_algorithm(cells[0]);
    if (!alg) throw ParseError("line " + std::to_string(line_no) + ": unknown algorithm");
    r.algorithm = *alg;
    r.n = parse_count(cells[1], "n");
    const auto bc = parse_bench_case(cells[2]);
    if (!bc) throw ParseError("line " + std::to_string(line_no) + ": unknown case");
    r.bench_case = *bc;
    r.trial = parse_count(cells[3], "trial");
    r.counters.comparisons = parse_count(cells[4], "comparisons");
    r.counters.swaps = parse_count(cells[5], "swaps");
    r.counters.invocations = parse_count(cells[6], "invocations");
    r.counters.shuffles = parse_count(cells[7], "shuffles");
    r.elapsed_ns = parse_count(cells[8], "elapsed_ns");
    rows.push_back(r);
  }
  return rows;
}

/// Median comparisons per n, ascending n. All rows must share one algorithm
/// and case.
inline growth::Series median_series(std::span<const BenchRow> rows) {
  if (rows.empty()) return {};
  std::map<std::size_t, std::vector<Count>> by_n;
  for (const BenchRow& r : rows) {
    if (r.algorithm != rows.front().algorithm || r.bench_case != rows.front().bench_case) {
      throw ParseError("CSV mixes algorithms or cases; fit one series at a time");
    }
    by_n[r.n].push_back(r.counters.comparisons);
  }
  growth::Series series;
  for (auto& [n, counts] : by_n) {
    std::sort(counts.begin(), counts.end());
    const std::size_t mid = counts.size() / 2;
    const double median = counts.size() % 2 == 1
                              ? static_cast<double>(counts[mid])
                              : (static_cast<double>(counts[mid - 1]) +
                                 static_cast<double>(counts[mid])) / 2.0;
    series.push_back({static_cast<std::int64_t>(n), median});
  }
  return series;
}

}  // namespace reluctant::io
