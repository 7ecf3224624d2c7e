#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/bootstrap.hpp"
#include "citemetrics/indicators.hpp"
#include "citemetrics/profile.hpp"
#include "citemetrics/simulate.hpp"
#include "citemetrics/stats.hpp"

namespace citemetrics {

// CSV dialect: comma separated, LF line endings, no quoting. Identifiers are
// restricted to [A-Za-z0-9_-]. Optional columns may be absent from the
// header, but a present column may not have empty cells.

bool valid_identifier(std::string_view id) noexcept;

/// Six significant digits, shortest form ("%.6g").
std::string format_real(double value);

/// Round-trip exact ("%.17g").
std::string format_exact(double value);

// papers.csv: author_id,paper_id,citations[,field_id][,pub_year]
// baselines.csv: field_id,pub_year,mean_citations
Corpus read_corpus(std::istream& papers, std::istream* baselines,
                   std::string_view papers_name = "papers.csv",
                   std::string_view baselines_name = "baselines.csv");
BaselineTable read_baselines(std::istream& in,
                             std::string_view name = "baselines.csv");
Corpus load_corpus(const std::filesystem::path& papers,
                   const std::optional<std::filesystem::path>& baselines =
                       std::nullopt);

void write_papers_header(std::ostream& out, bool field_id, bool pub_year);
void write_papers_rows(std::ostream& out, const CitationProfile& profile,
                       bool field_id, bool pub_year);
void write_papers(std::ostream& out, const Corpus& corpus);
void write_baselines(std::ostream& out, const BaselineTable& baselines);
void write_corpus(const Corpus& corpus, const std::filesystem::path& papers,
                  const std::optional<std::filesystem::path>& baselines =
                      std::nullopt);

// indicators.csv: author_id,p,c,mc,h,e,r,rm,ncs,mncs,iota_e
// Rows sorted by author_id; absent ncs/mncs are empty cells.
void write_indicators(std::ostream& out,
                      std::span<const IndicatorVector> vectors);
void write_indicators(std::span<const IndicatorVector> vectors,
                      const std::filesystem::path& path);
std::vector<IndicatorVector> read_indicators(
    std::istream& in, std::string_view name = "indicators.csv");
std::vector<IndicatorVector> load_indicators(const std::filesystem::path& path);

// correlations.csv: square matrix, header row and first column hold the
// indicator names; undefined cells are empty.
void write_correlations_csv(std::ostream& out, const CorrelationReport& report);
void write_correlations_json(std::ostream& out,
                             const CorrelationReport& report);
// sweep.csv: size,used,indicator,rho
void write_sweep(std::ostream& out, std::span<const SweepCell> cells);

// intervals.csv: author_id,indicator,point,lo,hi
void write_intervals(std::ostream& out,
                     std::span<const StabilityInterval> intervals);
// ranges.csv: author_id,indicator,range,log_range
void write_ranges(std::ostream& out, std::span<const RescaledRange> ranges);
void write_regressions_json(std::ostream& out,
                            std::span<const RangeRegression> regressions);

// curves.csv: x,y
void write_curve(std::ostream& out, std::span<const CurvePoint> points);
// histogram.csv: bin_lo,bin_hi,count
void write_histogram(std::ostream& out, std::span<const HistogramBin> bins);
// mega_authors.csv: author_id,p,c,scaled_total,scaled_iota_e
void write_mega_authors(std::ostream& out,
                        std::span<const MegaAuthor> authors);

/// Writes `content` to `path` through a temporary file and rename, so a
/// failed write never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace citemetrics
