// SPDX-License-Identifier: Apache-2.0
#pragma once

// Growth-law fitting for (n, count) series.
//
// Every candidate is scored by its residual sum of squares in natural-log
// count space, so models whose predictions differ by orders of magnitude are
// compared on relative error.
//
//   * Fixed-shape models (all except Exponential) are single-scale fits
//     count ~ c * g(n): intercept = mean(ln count - ln g(n)) = ln c.
//   * Exponential has a free base: ln count = intercept + slope * ln 2 * n.
//
// The `slope` reported per model is the fitted exponent where one applies:
//   - power laws (linear, quadratic, stooge, cubic): free least-squares slope
//     on (ln n, ln count), identical across the four;
//   - exponential: slope on (n, log2 count), so the fitted base is 2^slope;
//   - nlogn, quasipoly, linear_factorial: slope on (ln g(n), ln count),
//     which is 1 when the shape matches.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reluctant/types.hpp"

namespace reluctant::growth {

/// Ordered from slowest to fastest growth; ties in model selection go to the
/// earlier entry.
enum class GrowthModel {
  Linear,
  NLogN,
  Quadratic,
  Stooge,
  Cubic,
  QuasiPoly,
  Exponential,
  LinearFactorial,
};

inline constexpr std::array<GrowthModel, 8> kAllModels = {
    GrowthModel::Linear,    GrowthModel::NLogN,       GrowthModel::Quadratic,
    GrowthModel::Stooge,    GrowthModel::Cubic,       GrowthModel::QuasiPoly,
    GrowthModel::Exponential, GrowthModel::LinearFactorial,
};

/// log_{3/2} 3 = 2.7095...
inline const double kStoogeExponent = std::log(3.0) / std::log(1.5);

constexpr std::string_view name_of(GrowthModel m) {
  switch (m) {
    case GrowthModel::Linear: return "linear";
    case GrowthModel::NLogN: return "nlogn";
    case GrowthModel::Quadratic: return "quadratic";
    case GrowthModel::Stooge: return "stooge";
    case GrowthModel::Cubic: return "cubic";
    case GrowthModel::QuasiPoly: return "quasipoly";
    case GrowthModel::Exponential: return "exponential";
    case GrowthModel::LinearFactorial: return "linear_factorial";
  }
  return "?";
}

inline std::optional<GrowthModel> parse_model(std::string_view name) {
  for (GrowthModel m : kAllModels) {
    if (name_of(m) == name) return m;
  }
  return std::nullopt;
}

/// ln g(n) for the model's predictor; defined for n >= 2.
inline double log_predictor(GrowthModel m, double n) {
  const double ln_n = std::log(n);
  switch (m) {
    case GrowthModel::Linear: return ln_n;
    case GrowthModel::NLogN: return ln_n + std::log(ln_n);
    case GrowthModel::Quadratic: return 2.0 * ln_n;
    case GrowthModel::Stooge: return kStoogeExponent * ln_n;
    case GrowthModel::Cubic: return 3.0 * ln_n;
    case GrowthModel::QuasiPoly: return 0.5 * std::log2(n) * ln_n;
    case GrowthModel::Exponential: return n * std::numbers::ln2;
    case GrowthModel::LinearFactorial: return ln_n + std::lgamma(n + 1.0);
  }
  return 0.0;
}

inline bool is_power_law(GrowthModel m) {
  return m == GrowthModel::Linear || m == GrowthModel::Quadratic || m == GrowthModel::Stooge ||
         m == GrowthModel::Cubic;
}

struct SeriesPoint {
  std::int64_t n = 0;
  double count = 0.0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

using Series = std::vector<SeriesPoint>;

struct ModelFit {
  GrowthModel model = GrowthModel::Linear;
  double slope = 0.0;
  double intercept = 0.0;
  double rss = 0.0;

  /// Meaningful for Exponential only.
  double base() const { return std::exp2(slope); }
};

struct FitReport {
  Series series;
  std::array<ModelFit, kAllModels.size()> models{};
  GrowthModel selected = GrowthModel::Linear;

  const ModelFit& at(GrowthModel m) const { return models[static_cast<std::size_t>(m)]; }
  const ModelFit& best() const { return at(selected); }
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
inline LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const auto k = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  return {slope, my - slope * mx};
}

inline void validate_for_fit(const Series& series) {
  if (series.size() < 4) {
    throw DegenerateSeries("fit needs at least 4 points, got " + std::to_string(series.size()));
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series[i].count >= 1.0)) throw DegenerateSeries("fit needs every count >= 1");
    if (series[i].n < 2) throw DegenerateSeries("fit needs every n >= 2");
    if (i > 0 && series[i].n <= series[i - 1].n) {
      throw DegenerateSeries("fit needs strictly increasing n");
    }
  }
}

/// Free least-squares slope on (ln n, ln count).
inline double loglog_slope(const Series& series) {
  validate_for_fit(series);
  std::vector<double> x, y;
  for (const auto& p : series) {
    x.push_back(std::log(static_cast<double>(p.n)));
    y.push_back(std::log(p.count));
  }
  return least_squares(x, y).slope;
}

inline FitReport fit(const Series& series) {
  validate_for_fit(series);
  const std::size_t k = series.size();
  std::vector<double> y(k), ln_n(k), n(k);
  for (std::size_t i = 0; i < k; ++i) {
    n[i] = static_cast<double>(series[i].n);
    ln_n[i] = std::log(n[i]);
    y[i] = std::log(series[i].count);
  }
  const double power_slope = least_squares(ln_n, y).slope;

  FitReport report;
  report.series = series;
  std::vector<double> g(k);
  for (GrowthModel m : kAllModels) {
    ModelFit mf;
    mf.model = m;
    double rss = 0.0;
    if (m == GrowthModel::Exponential) {
      const LineFit line = least_squares(n, y);
      mf.slope = line.slope / std::numbers::ln2;
      mf.intercept = line.intercept;
      for (std::size_t i = 0; i < k; ++i) {
        const double r = y[i] - (line.intercept + line.slope * n[i]);
        rss += r * r;
      }
    } else {
      double shift = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = log_predictor(m, n[i]);
        shift += y[i] - g[i];
      }
      shift /= static_cast<double>(k);
      for (std::size_t i = 0; i < k; ++i) {
        const double r = y[i] - g[i] - shift;
        rss += r * r;
      }
      mf.intercept = shift;
      mf.slope = is_power_law(m) ? power_slope : least_squares(g, y).slope;
    }
    mf.rss = rss;
    report.models[static_cast<std::size_t>(m)] = mf;
  }

  GrowthModel best = kAllModels.front();
  for (GrowthModel m : kAllModels) {
    if (report.at(m).rss < report.at(best).rss) best = m;
  }
  report.selected = best;
  return report;
}

/// (n, count(n) / count(n-1)) for every point after the first. Requires
/// consecutive n values and positive counts.
inline std::vector<std::pair<std::int64_t, double>> ratio_diagnostic(const Series& series) {
  if (series.size() < 2) throw DegenerateSeries("ratio diagnostic needs at least 2 points");
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series[i].count > 0.0)) throw DegenerateSeries("ratio diagnostic needs counts > 0");
    if (i == 0) continue;
    if (series[i].n != series[i - 1].n + 1) {
      throw DegenerateSeries("ratio diagnostic needs consecutive n");
    }
    out.emplace_back(series[i].n, series[i].count / series[i - 1].count);
  }
  return out;
}

}  // namespace reluctant::growth
