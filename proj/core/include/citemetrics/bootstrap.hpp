#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citemetrics/indicators.hpp"
#include "citemetrics/profile.hpp"
#include "citemetrics/rng.hpp"
#include "citemetrics/stats.hpp"

namespace citemetrics {

struct StabilityInterval {
  std::string author_id;
  Indicator indicator = Indicator::IotaE;
  double point = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t replications = 0;
  double confidence = 0.0;

  friend bool operator==(const StabilityInterval&,
                         const StabilityInterval&) = default;
};

struct BootstrapOptions {
  std::size_t replications = 1000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
};

/// Draws paper_count papers uniformly with replacement. Throws
/// ValidationError on an empty profile.
CitationProfile resample_profile(const CitationProfile& profile,
                                 Xoshiro256StarStar& rng);

/// The generator used for one author: stream_seed(seed, author_id).
Xoshiro256StarStar author_stream(std::uint64_t seed,
                                 const std::string& author_id);

/// Linear interpolation between order statistics (Hyndman & Fan type 7).
/// `sorted` must be ascending and non-empty; 0 <= q <= 1.
double quantile_type7(std::span<const double> sorted, double q);

/// Percentile interval at (1 -/+ confidence) / 2 over `replications`
/// resamples. Deterministic for a given (seed, author_id).
StabilityInterval bootstrap_indicator(const CitationProfile& profile,
                                      Indicator indicator,
                                      const BootstrapOptions& options,
                                      const BaselineTable* baselines = nullptr);

/// Several indicators evaluated on the same replicate draws. Each interval
/// equals what bootstrap_indicator returns for that indicator alone.
std::vector<StabilityInterval> bootstrap_indicators(
    const CitationProfile& profile, std::span<const Indicator> indicators,
    const BootstrapOptions& options, const BaselineTable* baselines = nullptr);

/// Multiplies every value by 100 / max. Throws ValidationError when no value
/// is strictly positive.
std::map<std::string, double> rescale_to_max(
    const std::map<std::string, double>& values);

struct RescaledRange {
  std::string author_id;
  Indicator indicator = Indicator::IotaE;
  double range = 0.0;                // (hi - lo) on the 100 = max axis
  std::optional<double> log_range;   // log10(range); absent when range == 0
};

struct RangeRegression {
  Indicator y = Indicator::IotaE;
  Indicator x = Indicator::C;
  std::optional<OlsFit> fit;  // absent when fewer than two usable authors
  std::size_t n_used = 0;
  std::size_t n_excluded = 0;  // authors with a zero range on either axis
  std::string notice;
};

struct ComparisonOptions {
  BootstrapOptions bootstrap;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// (y, x) pairs regressed on log ranges. Pairs naming an indicator that
  /// was not bootstrapped are skipped.
  std::vector<std::pair<Indicator, Indicator>> pairs = {
      {Indicator::IotaE, Indicator::C}, {Indicator::IotaE, Indicator::R}};
};

struct StabilityComparison {
  std::vector<StabilityInterval> intervals;  // author-major, indicator-minor
  std::vector<RescaledRange> ranges;         // same order as intervals
  std::vector<RangeRegression> regressions;
};

/// Bootstraps every author of an (already filtered) corpus, rescales the
/// intervals by each indicator's population maximum of point estimates,
/// and regresses log10 ranges for the configured pairs. Output is
/// independent of the thread count.
StabilityComparison stability_comparison(const Corpus& corpus,
                                         std::span<const Indicator> indicators,
                                         const ComparisonOptions& options);

}  // namespace citemetrics
