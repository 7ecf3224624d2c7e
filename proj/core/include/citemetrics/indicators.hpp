#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/profile.hpp"

namespace citemetrics {

/// Citation counts held in descending order. The h-family indicators are
/// all defined over this ranking, so callers that evaluate several of them
/// sort once and share the view.
class RankedCounts {
 public:
  RankedCounts() = default;
  explicit RankedCounts(std::vector<Citations> counts);
  explicit RankedCounts(const CitationProfile& profile);

  std::span<const Citations> values() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }

 private:
  std::vector<Citations> counts_;
};

struct HCore {
  Citations h = 0;
  std::vector<Citations> core_citations;  // top-h counts, descending
  Citations core_sum = 0;
};

struct IndicatorVector {
  std::string author_id;
  Citations p = 0;
  Citations c = 0;
  double mc = 0.0;
  Citations h = 0;
  double e = 0.0;
  double r = 0.0;
  double rm = 0.0;
  std::optional<double> ncs;
  std::optional<double> mncs;
  double iota_e = 0.0;

  friend bool operator==(const IndicatorVector&,
                         const IndicatorVector&) = default;
};

enum class Indicator { P, C, MC, H, E, R, RM, NCS, MNCS, IotaE };

/// Row/column order used by every correlation report: C first, then the
/// remaining indicators with the Euclidean index last.
inline constexpr std::array<Indicator, 10> kReportOrder = {
    Indicator::C,  Indicator::P,   Indicator::MC,   Indicator::H,
    Indicator::E,  Indicator::R,   Indicator::RM,   Indicator::NCS,
    Indicator::MNCS, Indicator::IotaE};

std::string_view indicator_name(Indicator indicator) noexcept;
std::optional<Indicator> parse_indicator(std::string_view name) noexcept;

/// Absent only for ncs/mncs when they were not computed.
std::optional<double> indicator_value(const IndicatorVector& v,
                                      Indicator indicator) noexcept;

// Raw counts in any order.
Citations total_citations(std::span<const Citations> counts) noexcept;
double mean_citations(std::span<const Citations> counts) noexcept;

// Euclidean length of the count vector. The real-valued overload accepts
// rescaled profiles.
double euclidean_index(std::span<const Citations> counts) noexcept;
double euclidean_index(std::span<const double> counts) noexcept;

Citations h_index(const RankedCounts& ranked) noexcept;
HCore h_core(const RankedCounts& ranked);
double r_index(const RankedCounts& ranked) noexcept;
double rm_index(const RankedCounts& ranked) noexcept;
double e_index(const RankedCounts& ranked) noexcept;

Citations total_citations(const CitationProfile& profile) noexcept;
double mean_citations(const CitationProfile& profile) noexcept;
Citations h_index(const CitationProfile& profile);
HCore h_core(const CitationProfile& profile);
double r_index(const CitationProfile& profile);
double rm_index(const CitationProfile& profile);
double e_index(const CitationProfile& profile);
double euclidean_index(const CitationProfile& profile);

/// Sum of c_i / expected(field_i, year_i). Throws MissingBaseline when a
/// paper lacks metadata or its cell is not in the table.
double ncs(const CitationProfile& profile, const BaselineTable& baselines);
double mncs(const CitationProfile& profile, const BaselineTable& baselines);

/// Every indicator except ncs/mncs, from an already-ranked count vector.
IndicatorVector compute_counts(const RankedCounts& ranked);

/// As compute_counts, for a span the caller guarantees is descending.
IndicatorVector compute_descending(std::span<const Citations> descending);

/// All indicators for one author. ncs/mncs are filled only when baselines
/// are supplied and every paper carries field/year metadata.
IndicatorVector compute_all(const CitationProfile& profile,
                            const BaselineTable* baselines = nullptr);

std::vector<IndicatorVector> compute_corpus(const Corpus& corpus);

}  // namespace citemetrics
