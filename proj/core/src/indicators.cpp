#include "citemetrics/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "citemetrics/error.hpp"

namespace citemetrics {

RankedCounts::RankedCounts(std::vector<Citations> counts)
    : counts_(std::move(counts)) {
  std::sort(counts_.begin(), counts_.end(), std::greater<>());
}

RankedCounts::RankedCounts(const CitationProfile& profile)
    : RankedCounts(profile.counts()) {}

namespace {

struct NameEntry {
  Indicator indicator;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Indicator::P, "p"},       {Indicator::C, "c"},
    {Indicator::MC, "mc"},     {Indicator::H, "h"},
    {Indicator::E, "e"},       {Indicator::R, "r"},
    {Indicator::RM, "rm"},     {Indicator::NCS, "ncs"},
    {Indicator::MNCS, "mncs"}, {Indicator::IotaE, "iota_e"},
};

}  // namespace

std::string_view indicator_name(Indicator indicator) noexcept {
  for (const auto& entry : kNames) {
    if (entry.indicator == indicator) return entry.name;
  }
  return {};
}

std::optional<Indicator> parse_indicator(std::string_view name) noexcept {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.indicator;
  }
  return std::nullopt;
}

std::optional<double> indicator_value(const IndicatorVector& v,
                                      Indicator indicator) noexcept {
  switch (indicator) {
    case Indicator::P: return static_cast<double>(v.p);
    case Indicator::C: return static_cast<double>(v.c);
    case Indicator::MC: return v.mc;
    case Indicator::H: return static_cast<double>(v.h);
    case Indicator::E: return v.e;
    case Indicator::R: return v.r;
    case Indicator::RM: return v.rm;
    case Indicator::NCS: return v.ncs;
    case Indicator::MNCS: return v.mncs;
    case Indicator::IotaE: return v.iota_e;
  }
  return std::nullopt;
}

Citations total_citations(std::span<const Citations> counts) noexcept {
  Citations sum = 0;
  for (Citations c : counts) sum += c;
  return sum;
}

double mean_citations(std::span<const Citations> counts) noexcept {
  if (counts.empty()) return 0.0;
  return static_cast<double>(total_citations(counts)) /
         static_cast<double>(counts.size());
}

double euclidean_index(std::span<const Citations> counts) noexcept {
  double ss = 0.0;
  for (Citations c : counts) {
    const auto x = static_cast<double>(c);
    ss += x * x;
  }
  return std::sqrt(ss);
}

double euclidean_index(std::span<const double> counts) noexcept {
  double ss = 0.0;
  for (double x : counts) ss += x * x;
  return std::sqrt(ss);
}

Citations h_index(const RankedCounts& ranked) noexcept {
  // Counts are descending, so c_(i) >= i fails for good once it fails.
  const auto values = ranked.values();
  Citations h = 0;
  while (static_cast<std::size_t>(h) < values.size() && values[h] >= h + 1) {
    ++h;
  }
  return h;
}

HCore h_core(const RankedCounts& ranked) {
  HCore core;
  core.h = h_index(ranked);
  const auto top = ranked.values().first(static_cast<std::size_t>(core.h));
  core.core_citations.assign(top.begin(), top.end());
  core.core_sum = total_citations(top);
  return core;
}

namespace {

Citations core_sum(const RankedCounts& ranked, Citations h) noexcept {
  return total_citations(ranked.values().first(static_cast<std::size_t>(h)));
}

}  // namespace

double r_index(const RankedCounts& ranked) noexcept {
  return std::sqrt(static_cast<double>(core_sum(ranked, h_index(ranked))));
}

double rm_index(const RankedCounts& ranked) noexcept {
  const auto h = static_cast<std::size_t>(h_index(ranked));
  double sum = 0.0;
  for (Citations c : ranked.values().first(h)) {
    sum += std::sqrt(static_cast<double>(c));
  }
  return std::sqrt(sum);
}

double e_index(const RankedCounts& ranked) noexcept {
  const Citations h = h_index(ranked);
  return std::sqrt(static_cast<double>(core_sum(ranked, h) - h * h));
}

Citations total_citations(const CitationProfile& profile) noexcept {
  Citations sum = 0;
  for (const auto& paper : profile.papers()) sum += paper.citations;
  return sum;
}

double mean_citations(const CitationProfile& profile) noexcept {
  if (profile.empty()) return 0.0;
  return static_cast<double>(total_citations(profile)) /
         static_cast<double>(profile.paper_count());
}

Citations h_index(const CitationProfile& profile) {
  return h_index(RankedCounts(profile));
}
HCore h_core(const CitationProfile& profile) {
  return h_core(RankedCounts(profile));
}
double r_index(const CitationProfile& profile) {
  return r_index(RankedCounts(profile));
}
double rm_index(const CitationProfile& profile) {
  return rm_index(RankedCounts(profile));
}
double e_index(const CitationProfile& profile) {
  return e_index(RankedCounts(profile));
}
double euclidean_index(const CitationProfile& profile) {
  return euclidean_index(std::span<const Citations>(profile.counts()));
}

double ncs(const CitationProfile& profile, const BaselineTable& baselines) {
  double sum = 0.0;
  for (const auto& paper : profile.papers()) {
    if (!paper.field_id) throw MissingBaseline(paper.paper_id, "field_id");
    if (!paper.pub_year) throw MissingBaseline(paper.paper_id, "pub_year");
    const auto expected = baselines.expected(*paper.field_id, *paper.pub_year);
    if (!expected) throw MissingBaseline(*paper.field_id, *paper.pub_year);
    sum += static_cast<double>(paper.citations) / *expected;
  }
  return sum;
}

double mncs(const CitationProfile& profile, const BaselineTable& baselines) {
  if (profile.empty()) return 0.0;
  return ncs(profile, baselines) / static_cast<double>(profile.paper_count());
}

IndicatorVector compute_counts(const RankedCounts& ranked) {
  return compute_descending(ranked.values());
}

IndicatorVector compute_descending(std::span<const Citations> values) {
  IndicatorVector v;
  v.p = static_cast<Citations>(values.size());
  v.c = total_citations(values);
  v.mc = mean_citations(values);
  while (static_cast<std::size_t>(v.h) < values.size() &&
         values[v.h] >= v.h + 1) {
    ++v.h;
  }

  Citations sum = 0;
  double root_sum = 0.0;
  for (Citations c : values.first(static_cast<std::size_t>(v.h))) {
    sum += c;
    root_sum += std::sqrt(static_cast<double>(c));
  }
  v.r = std::sqrt(static_cast<double>(sum));
  v.rm = std::sqrt(root_sum);
  v.e = std::sqrt(static_cast<double>(sum - v.h * v.h));
  v.iota_e = euclidean_index(values);
  return v;
}

IndicatorVector compute_all(const CitationProfile& profile,
                            const BaselineTable* baselines) {
  IndicatorVector v = compute_counts(RankedCounts(profile));
  v.author_id = profile.author_id();
  if (baselines != nullptr && profile.has_field_year()) {
    v.ncs = ncs(profile, *baselines);
    v.mncs = profile.empty() ? 0.0 : *v.ncs / static_cast<double>(v.p);
  }
  return v;
}

std::vector<IndicatorVector> compute_corpus(const Corpus& corpus) {
  const BaselineTable* baselines =
      corpus.baselines() ? &*corpus.baselines() : nullptr;
  std::vector<IndicatorVector> out;
  out.reserve(corpus.size());
  for (const auto& author : corpus.authors()) {
    out.push_back(compute_all(author, baselines));
  }
  return out;
}

}  // namespace citemetrics
