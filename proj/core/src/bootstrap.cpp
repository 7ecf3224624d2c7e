#include "citemetrics/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "citemetrics/error.hpp"

namespace citemetrics {

CitationProfile resample_profile(const CitationProfile& profile,
                                 Xoshiro256StarStar& rng) {
  if (profile.empty()) {
    throw ValidationError("cannot resample empty profile '" +
                          profile.author_id() + "'");
  }
  const auto papers = profile.papers();
  std::vector<PaperRecord> drawn;
  drawn.reserve(papers.size());
  for (std::size_t k = 0; k < papers.size(); ++k) {
    PaperRecord paper = papers[uniform_below(rng, papers.size())];
    // '#' is outside the file identifier alphabet, so ids cannot collide.
    paper.paper_id += '#' + std::to_string(k);
    drawn.push_back(std::move(paper));
  }
  return CitationProfile(profile.author_id(), std::move(drawn));
}

Xoshiro256StarStar author_stream(std::uint64_t seed,
                                 const std::string& author_id) {
  return Xoshiro256StarStar(stream_seed(seed, author_id));
}

double quantile_type7(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("quantile level must lie in [0, 1]");
  }
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lower = static_cast<std::size_t>(std::floor(h));
  if (lower + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lower);
  return sorted[lower] + frac * (sorted[lower + 1] - sorted[lower]);
}

namespace {

void check_options(const BootstrapOptions& options) {
  if (options.replications < 1) {
    throw ValidationError("replications must be >= 1");
  }
  if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
    throw ValidationError("confidence must lie strictly between 0 and 1");
  }
}

bool needs_baselines(Indicator indicator) {
  return indicator == Indicator::NCS || indicator == Indicator::MNCS;
}

double select(const IndicatorVector& v, Indicator indicator) {
  const auto value = indicator_value(v, indicator);
  if (!value) {
    throw ValidationError("indicator '" +
                          std::string(indicator_name(indicator)) +
                          "' unavailable for author '" + v.author_id + "'");
  }
  return *value;
}

}  // namespace

std::vector<StabilityInterval> bootstrap_indicators(
    const CitationProfile& profile, std::span<const Indicator> indicators,
    const BootstrapOptions& options, const BaselineTable* baselines) {
  check_options(options);
  if (profile.empty()) {
    throw ValidationError("cannot bootstrap empty profile '" +
                          profile.author_id() + "'");
  }
  const bool normalized =
      std::any_of(indicators.begin(), indicators.end(), needs_baselines);
  if (normalized && baselines == nullptr) {
    throw ValidationError("ncs/mncs bootstrap requires a baseline table");
  }

  const auto papers = profile.papers();
  const std::size_t p = papers.size();
  std::vector<double> weights;  // per-paper normalized score
  if (normalized) {
    weights.reserve(p);
    for (const auto& paper : papers) {
      if (!paper.field_id) throw MissingBaseline(paper.paper_id, "field_id");
      if (!paper.pub_year) throw MissingBaseline(paper.paper_id, "pub_year");
      const auto expected =
          baselines->expected(*paper.field_id, *paper.pub_year);
      if (!expected) throw MissingBaseline(*paper.field_id, *paper.pub_year);
      weights.push_back(static_cast<double>(paper.citations) / *expected);
    }
  }

  const IndicatorVector point =
      compute_all(profile, normalized ? baselines : nullptr);

  std::vector<std::vector<double>> replicates(
      indicators.size(), std::vector<double>(options.replications));
  std::vector<Citations> buffer(p);
  auto rng = author_stream(options.seed, profile.author_id());
  for (std::size_t rep = 0; rep < options.replications; ++rep) {
    double ncs_sum = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
      const auto i = uniform_below(rng, p);
      buffer[k] = papers[i].citations;
      if (normalized) ncs_sum += weights[i];
    }
    std::sort(buffer.begin(), buffer.end(), std::greater<>());
    IndicatorVector v = compute_descending(buffer);
    if (normalized) {
      v.ncs = ncs_sum;
      v.mncs = ncs_sum / static_cast<double>(p);
    }
    for (std::size_t j = 0; j < indicators.size(); ++j) {
      replicates[j][rep] = select(v, indicators[j]);
    }
  }

  const double lo_q = (1.0 - options.confidence) / 2.0;
  const double hi_q = (1.0 + options.confidence) / 2.0;
  std::vector<StabilityInterval> out;
  out.reserve(indicators.size());
  for (std::size_t j = 0; j < indicators.size(); ++j) {
    auto& values = replicates[j];
    std::sort(values.begin(), values.end());
    out.push_back(StabilityInterval{
        profile.author_id(), indicators[j], select(point, indicators[j]),
        quantile_type7(values, lo_q), quantile_type7(values, hi_q),
        options.replications, options.confidence});
  }
  return out;
}

StabilityInterval bootstrap_indicator(const CitationProfile& profile,
                                      Indicator indicator,
                                      const BootstrapOptions& options,
                                      const BaselineTable* baselines) {
  const Indicator one[] = {indicator};
  return bootstrap_indicators(profile, one, options, baselines).front();
}

std::map<std::string, double> rescale_to_max(
    const std::map<std::string, double>& values) {
  double max = 0.0;
  for (const auto& [key, value] : values) max = std::max(max, value);
  if (!(max > 0.0)) {
    throw ValidationError("rescale_to_max needs at least one positive value");
  }
  const double factor = 100.0 / max;
  std::map<std::string, double> out;
  for (const auto& [key, value] : values) {
    // The maximum maps to exactly 100 rather than max * (100 / max).
    out.emplace(key, value == max ? 100.0 : value * factor);
  }
  return out;
}

namespace {

std::vector<std::vector<StabilityInterval>> bootstrap_all(
    const Corpus& corpus, std::span<const Indicator> indicators,
    const ComparisonOptions& options) {
  const auto authors = corpus.authors();
  const BaselineTable* baselines =
      corpus.baselines() ? &*corpus.baselines() : nullptr;
  std::vector<std::vector<StabilityInterval>> results(authors.size());

  unsigned threads = options.threads == 0
                         ? std::max(1U, std::thread::hardware_concurrency())
                         : options.threads;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, authors.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= authors.size()) return;
      try {
        results[i] = bootstrap_indicators(authors[i], indicators,
                                          options.bootstrap, baselines);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(authors.size());
        return;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace

StabilityComparison stability_comparison(const Corpus& corpus,
                                         std::span<const Indicator> indicators,
                                         const ComparisonOptions& options) {
  check_options(options.bootstrap);
  if (indicators.empty()) throw ValidationError("no indicators requested");
  if (corpus.empty()) throw ValidationError("corpus has no authors");

  const auto per_author = bootstrap_all(corpus, indicators, options);

  std::vector<double> factors(indicators.size());
  for (std::size_t j = 0; j < indicators.size(); ++j) {
    double max = 0.0;
    for (const auto& row : per_author) max = std::max(max, row[j].point);
    if (!(max > 0.0)) {
      throw ValidationError("indicator '" +
                            std::string(indicator_name(indicators[j])) +
                            "' is zero for every author; cannot rescale");
    }
    factors[j] = 100.0 / max;
  }

  StabilityComparison out;
  out.intervals.reserve(per_author.size() * indicators.size());
  out.ranges.reserve(per_author.size() * indicators.size());
  for (const auto& row : per_author) {
    for (std::size_t j = 0; j < indicators.size(); ++j) {
      const auto& interval = row[j];
      RescaledRange range{interval.author_id, interval.indicator,
                          interval.hi * factors[j] - interval.lo * factors[j],
                          std::nullopt};
      if (range.range > 0.0) range.log_range = std::log10(range.range);
      out.intervals.push_back(interval);
      out.ranges.push_back(std::move(range));
    }
  }

  const auto column_of = [&](Indicator indicator) -> std::optional<std::size_t> {
    auto it = std::find(indicators.begin(), indicators.end(), indicator);
    if (it == indicators.end()) return std::nullopt;
    return static_cast<std::size_t>(it - indicators.begin());
  };
  for (const auto& [y, x] : options.pairs) {
    const auto yj = column_of(y);
    const auto xj = column_of(x);
    if (!yj || !xj) continue;

    RangeRegression regression;
    regression.y = y;
    regression.x = x;
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t a = 0; a < per_author.size(); ++a) {
      const auto& ly = out.ranges[a * indicators.size() + *yj].log_range;
      const auto& lx = out.ranges[a * indicators.size() + *xj].log_range;
      if (ly && lx) {
        ys.push_back(*ly);
        xs.push_back(*lx);
      } else {
        ++regression.n_excluded;
      }
    }
    regression.n_used = xs.size();
    if (xs.size() < 2) {
      regression.notice = "regression skipped: fewer than two authors with "
                          "non-zero interval ranges";
    } else {
      try {
        regression.fit = ols(xs, ys);
      } catch (const UndefinedCorrelation&) {
        regression.notice =
            "regression skipped: log ranges of x have no variance";
      }
    }
    if (regression.n_excluded > 0 && regression.notice.empty()) {
      regression.notice = std::to_string(regression.n_excluded) +
                          " authors with zero-width intervals excluded";
    }
    out.regressions.push_back(std::move(regression));
  }
  return out;
}

}  // namespace citemetrics
