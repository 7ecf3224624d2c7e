#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citemetrics {

using Citations = std::int64_t;

struct PaperRecord {
  std::string paper_id;
  Citations citations = 0;
  std::optional<std::string> field_id;
  std::optional<int> pub_year;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// One author's papers. Immutable once constructed; the constructor enforces
/// non-negative counts and paper_id uniqueness.
class CitationProfile {
 public:
  CitationProfile() = default;
  CitationProfile(std::string author_id, std::vector<PaperRecord> papers);

  const std::string& author_id() const noexcept { return author_id_; }
  std::span<const PaperRecord> papers() const noexcept { return papers_; }
  std::size_t paper_count() const noexcept { return papers_.size(); }
  bool empty() const noexcept { return papers_.empty(); }

  /// Citation counts in paper order.
  std::vector<Citations> counts() const;

  /// True when every paper carries both field_id and pub_year.
  /// Vacuously true for an empty profile.
  bool has_field_year() const noexcept;

  friend bool operator==(const CitationProfile&,
                         const CitationProfile&) = default;

 private:
  std::string author_id_;
  std::vector<PaperRecord> papers_;
};

/// Paper indices ordered by descending citations; equal counts are ordered
/// by ascending paper_id. Always a permutation of [0, paper_count).
std::vector<std::size_t> ranking(const CitationProfile& profile);

/// Citation counts sorted descending.
std::vector<Citations> ranked_citations(const CitationProfile& profile);

struct CellKey {
  std::string field_id;
  int pub_year = 0;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// Expected citations per (field, year) cell. Every entry is > 0.
class BaselineTable {
 public:
  BaselineTable() = default;
  explicit BaselineTable(std::map<CellKey, double> entries);

  std::optional<double> expected(std::string_view field_id,
                                 int pub_year) const;
  const std::map<CellKey, double>& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const BaselineTable&, const BaselineTable&) = default;

 private:
  std::map<CellKey, double> entries_;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<CitationProfile> authors,
                  std::optional<BaselineTable> baselines = std::nullopt);

  std::span<const CitationProfile> authors() const noexcept {
    return authors_;
  }
  const std::optional<BaselineTable>& baselines() const noexcept {
    return baselines_;
  }
  std::size_t size() const noexcept { return authors_.size(); }
  bool empty() const noexcept { return authors_.empty(); }

  const CitationProfile* find(std::string_view author_id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::vector<CitationProfile> authors_;
  std::optional<BaselineTable> baselines_;
};

/// Threshold comparator: "at least twenty papers" is AtLeast,
/// "more than 50 papers" is MoreThan.
enum class Bound { AtLeast, MoreThan };

struct YearRange {
  int from = 0;  // inclusive
  int to = 0;    // inclusive

  bool contains(int year) const noexcept { return year >= from && year <= to; }
};

struct AuthorFilter {
  Citations min_papers = 0;
  Bound papers_bound = Bound::AtLeast;
  Citations min_citations = 0;
  Bound citations_bound = Bound::AtLeast;
  std::optional<YearRange> first_year;
};

struct FilterResult {
  Corpus corpus;
  /// Authors dropped because a year range was requested but none of their
  /// papers has a pub_year.
  std::size_t missing_year_rejections = 0;
};

/// Earliest pub_year across the profile's papers, if any paper has one.
std::optional<int> first_publication_year(const CitationProfile& profile);

/// Keeps exactly the authors satisfying every supplied predicate, in the
/// original order. Baselines carry over unchanged.
FilterResult filter_authors(const Corpus& corpus, const AuthorFilter& filter);

}  // namespace citemetrics
