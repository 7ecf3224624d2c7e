#pragma once

#include <string>
#include <vector>

#include "citemetrics/profile.hpp"

namespace testing_support {

inline citemetrics::CitationProfile profile_of(
    const std::vector<long long>& counts, const std::string& author = "a1") {
  std::vector<citemetrics::PaperRecord> papers;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    papers.push_back({"p" + std::to_string(i), counts[i], std::nullopt,
                      std::nullopt});
  }
  return citemetrics::CitationProfile(author, std::move(papers));
}

}  // namespace testing_support
