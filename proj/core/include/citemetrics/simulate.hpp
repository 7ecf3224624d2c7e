#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "citemetrics/profile.hpp"
#include "citemetrics/rng.hpp"

namespace citemetrics {

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Two papers sharing `total` citations: y = sqrt((total - x)^2 + x^2) for
/// x = 0, step, ..., total. The last point is always x = total.
std::vector<CurvePoint> two_paper_fixed_sum(Citations total, Citations step);

/// Two papers with a fixed Euclidean index: paper b receives
/// sqrt(iota^2 - x^2) when paper a receives x, and y is their sum, for
/// x = 0, step, ..., iota (last point pinned to iota).
std::vector<CurvePoint> two_paper_fixed_iota(double iota, double step);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

/// Equal-width bins over [lo, hi]; the top edge is closed. Values outside
/// the range are ignored. lo == hi yields a single bin.
std::vector<HistogramBin> histogram(std::span<const double> values, double lo,
                                    double hi, std::size_t bins);

struct MegaOptions {
  double target_total = 1e6;
  Citations min_papers = 20;
  Citations min_citations = 100;
  std::size_t bins = 50;
};

struct MegaAuthor {
  std::string author_id;
  Citations p = 0;
  Citations c = 0;
  double scaled_total = 0.0;
  double scaled_iota_e = 0.0;
};

struct MegaNormalization {
  std::vector<MegaAuthor> authors;
  std::vector<HistogramBin> histogram;  // over [target/sqrt(max p), target]
  std::size_t excluded = 0;
};

/// Rescales every qualifying author's counts (real-valued) so they sum to
/// target_total, then recomputes the Euclidean index.
MegaNormalization mega_citation_normalization(const Corpus& corpus,
                                              const MegaOptions& options);

// ---------------------------------------------------------------------------
// Synthetic corpora

/// Fixed value for every draw.
struct ConstantLaw {
  Citations value = 0;
};

/// minimum + NB(successes, probability), the number of failures before the
/// `successes`-th success. Mean = minimum + successes (1 - p) / p.
struct NegativeBinomialLaw {
  Citations minimum = 1;
  int successes = 2;
  double probability = 0.06;
};

/// floor(exp(mu_a + sigma * Z)) with an author-level location
/// mu_a = mu + author_sigma * Z_a.
struct LognormalLaw {
  double mu = 1.0;
  double sigma = 1.1;
  double author_sigma = 0.7;
};

using PapersLaw = std::variant<NegativeBinomialLaw, ConstantLaw>;
using CitationsLaw = std::variant<LognormalLaw, ConstantLaw>;

/// Field and publication-year keys. Each author gets a home field and a
/// first year in [first_year_from, first_year_to]; the first paper is
/// published that year and later papers uniformly up to last_year.
struct MetadataConfig {
  int fields = 10;
  int first_year_from = 2000;
  int first_year_to = 2005;
  int last_year = 2015;
  /// Probability that a paper is filed outside the author's home field.
  double cross_field = 0.2;
};

struct GeneratorConfig {
  std::size_t n_authors = 1000;
  PapersLaw papers = NegativeBinomialLaw{};
  CitationsLaw citations = LognormalLaw{};
  std::optional<MetadataConfig> metadata;
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the first invalid parameter.
  void validate() const;
};

/// Deterministic per-author generation; author i depends only on
/// (config, i), so authors can be produced in any order or streamed.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(GeneratorConfig config);

  const GeneratorConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return config_.n_authors; }
  std::string author_id(std::size_t index) const;
  CitationProfile author(std::size_t index) const;

 private:
  GeneratorConfig config_;
  int id_width_ = 1;
};

/// Running per-cell means; yields the synthetic baseline table.
class BaselineAccumulator {
 public:
  void add(const CitationProfile& profile);
  BaselineTable table() const;

 private:
  struct Cell {
    double sum = 0.0;
    std::size_t n = 0;
  };
  std::map<CellKey, Cell> cells_;
};

/// Materialized corpus; baselines present iff metadata is enabled. A cell
/// whose generated counts are all zero gets expected value 1.
Corpus generate_corpus(const GeneratorConfig& config);

}  // namespace citemetrics
