#include "citemetrics/profile.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "citemetrics/error.hpp"

namespace citemetrics {

CitationProfile::CitationProfile(std::string author_id,
                                 std::vector<PaperRecord> papers)
    : author_id_(std::move(author_id)), papers_(std::move(papers)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(papers_.size());
  for (const auto& paper : papers_) {
    if (paper.citations < 0) {
      throw ValidationError("author '" + author_id_ + "', paper '" +
                            paper.paper_id + "': negative citation count " +
                            std::to_string(paper.citations));
    }
    if (!seen.insert(paper.paper_id).second) {
      throw ValidationError("author '" + author_id_ + "': duplicate paper_id '" +
                            paper.paper_id + "'");
    }
  }
}

std::vector<Citations> CitationProfile::counts() const {
  std::vector<Citations> out;
  out.reserve(papers_.size());
  for (const auto& paper : papers_) out.push_back(paper.citations);
  return out;
}

bool CitationProfile::has_field_year() const noexcept {
  return std::all_of(papers_.begin(), papers_.end(), [](const PaperRecord& p) {
    return p.field_id.has_value() && p.pub_year.has_value();
  });
}

std::vector<std::size_t> ranking(const CitationProfile& profile) {
  const auto papers = profile.papers();
  std::vector<std::size_t> order(papers.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (papers[a].citations != papers[b].citations) {
      return papers[a].citations > papers[b].citations;
    }
    return papers[a].paper_id < papers[b].paper_id;
  });
  return order;
}

std::vector<Citations> ranked_citations(const CitationProfile& profile) {
  std::vector<Citations> out;
  out.reserve(profile.paper_count());
  for (std::size_t i : ranking(profile)) {
    out.push_back(profile.papers()[i].citations);
  }
  return out;
}

BaselineTable::BaselineTable(std::map<CellKey, double> entries)
    : entries_(std::move(entries)) {
  for (const auto& [key, value] : entries_) {
    if (!(value > 0.0)) {
      throw ValidationError("baseline for field '" + key.field_id + "', year " +
                            std::to_string(key.pub_year) +
                            " must be positive");
    }
  }
}

std::optional<double> BaselineTable::expected(std::string_view field_id,
                                              int pub_year) const {
  auto it = entries_.find(CellKey{std::string(field_id), pub_year});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Corpus::Corpus(std::vector<CitationProfile> authors,
               std::optional<BaselineTable> baselines)
    : authors_(std::move(authors)), baselines_(std::move(baselines)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(authors_.size());
  for (const auto& author : authors_) {
    if (!seen.insert(author.author_id()).second) {
      throw ValidationError("duplicate author_id '" + author.author_id() + "'");
    }
  }
}

const CitationProfile* Corpus::find(std::string_view author_id) const {
  auto it = std::find_if(authors_.begin(), authors_.end(),
                         [&](const CitationProfile& p) {
                           return p.author_id() == author_id;
                         });
  return it == authors_.end() ? nullptr : &*it;
}

std::optional<int> first_publication_year(const CitationProfile& profile) {
  std::optional<int> first;
  for (const auto& paper : profile.papers()) {
    if (paper.pub_year && (!first || *paper.pub_year < *first)) {
      first = paper.pub_year;
    }
  }
  return first;
}

namespace {

bool passes(Citations value, Citations threshold, Bound bound) {
  return bound == Bound::AtLeast ? value >= threshold : value > threshold;
}

}  // namespace

FilterResult filter_authors(const Corpus& corpus, const AuthorFilter& filter) {
  if (filter.min_papers < 0 || filter.min_citations < 0) {
    throw ValidationError("filter thresholds must be non-negative");
  }
  std::vector<CitationProfile> kept;
  std::size_t missing_years = 0;
  for (const auto& author : corpus.authors()) {
    const auto p = static_cast<Citations>(author.paper_count());
    if (!passes(p, filter.min_papers, filter.papers_bound)) continue;

    Citations c = 0;
    for (const auto& paper : author.papers()) c += paper.citations;
    if (!passes(c, filter.min_citations, filter.citations_bound)) continue;

    if (filter.first_year) {
      const auto first = first_publication_year(author);
      if (!first) {
        ++missing_years;
        continue;
      }
      if (!filter.first_year->contains(*first)) continue;
    }
    kept.push_back(author);
  }
  return FilterResult{Corpus(std::move(kept), corpus.baselines()),
                      missing_years};
}

}  // namespace citemetrics
