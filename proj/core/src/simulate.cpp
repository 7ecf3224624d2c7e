#include "citemetrics/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "citemetrics/error.hpp"
#include "citemetrics/indicators.hpp"

namespace citemetrics {

std::vector<CurvePoint> two_paper_fixed_sum(Citations total, Citations step) {
  if (total < 0) throw ValidationError("total must be >= 0");
  if (total == 0) return {CurvePoint{0.0, 0.0}};
  if (step < 1 || step > total) {
    throw ValidationError("step must lie in [1, total]");
  }
  std::vector<CurvePoint> points;
  points.reserve(static_cast<std::size_t>(total / step) + 2);
  const auto value = [total](Citations b) {
    const auto a = static_cast<double>(total - b);
    const auto bb = static_cast<double>(b);
    return std::sqrt(a * a + bb * bb);
  };
  for (Citations b = 0; b < total; b += step) {
    points.push_back({static_cast<double>(b), value(b)});
  }
  points.push_back({static_cast<double>(total), value(total)});
  return points;
}

std::vector<CurvePoint> two_paper_fixed_iota(double iota, double step) {
  if (!(iota > 0.0) || !std::isfinite(iota)) {
    throw ValidationError("iota must be positive");
  }
  if (!(step > 0.0 && step <= iota)) {
    throw ValidationError("step must lie in (0, iota]");
  }
  const auto value = [iota](double a) {
    return a + std::sqrt(std::max(0.0, iota * iota - a * a));
  };
  std::vector<CurvePoint> points;
  const auto steps = static_cast<std::size_t>(std::floor(iota / step));
  points.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double a = std::min(static_cast<double>(k) * step, iota);
    points.push_back({a, value(a)});
  }
  // Snap a last grid point that only misses iota through rounding.
  if (iota - points.back().x <= step * 1e-9) {
    points.back() = {iota, value(iota)};
  } else {
    points.push_back({iota, value(iota)});
  }
  return points;
}

std::vector<HistogramBin> histogram(std::span<const double> values, double lo,
                                    double hi, std::size_t bins) {
  if (bins == 0) throw ValidationError("histogram needs at least one bin");
  if (!(lo <= hi)) throw ValidationError("histogram range is inverted");
  if (lo == hi) {
    const auto n = static_cast<std::size_t>(
        std::count(values.begin(), values.end(), lo));
    return {HistogramBin{lo, hi, n}};
  }
  std::vector<HistogramBin> out(bins);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    out[i].lo = lo + width * static_cast<double>(i);
    out[i].hi = i + 1 == bins ? hi : lo + width * static_cast<double>(i + 1);
  }
  for (double v : values) {
    if (v < lo || v > hi) continue;
    auto i = static_cast<std::size_t>((v - lo) / width);
    i = std::min(i, bins - 1);
    ++out[i].count;
  }
  return out;
}

MegaNormalization mega_citation_normalization(const Corpus& corpus,
                                              const MegaOptions& options) {
  if (!(options.target_total > 0.0)) {
    throw ValidationError("target total must be positive");
  }
  AuthorFilter filter;
  filter.min_papers = options.min_papers;
  filter.min_citations = options.min_citations;
  const auto kept = filter_authors(corpus, filter).corpus;

  MegaNormalization out;
  std::vector<double> scaled;
  std::vector<double> iotas;
  Citations max_p = 0;
  for (const auto& author : kept.authors()) {
    const Citations c = total_citations(author);
    if (c == 0) continue;  // cannot be scaled to the target
    const double factor = options.target_total / static_cast<double>(c);
    scaled.clear();
    for (const auto& paper : author.papers()) {
      scaled.push_back(static_cast<double>(paper.citations) * factor);
    }
    MegaAuthor row;
    row.author_id = author.author_id();
    row.p = static_cast<Citations>(author.paper_count());
    row.c = c;
    for (double x : scaled) row.scaled_total += x;
    row.scaled_iota_e = euclidean_index(std::span<const double>(scaled));
    max_p = std::max(max_p, row.p);
    iotas.push_back(row.scaled_iota_e);
    out.authors.push_back(std::move(row));
  }
  out.excluded = corpus.size() - out.authors.size();
  if (!out.authors.empty()) {
    const double lo =
        options.target_total / std::sqrt(static_cast<double>(max_p));
    out.histogram = histogram(iotas, lo, options.target_total, options.bins);
  }
  return out;
}

void GeneratorConfig::validate() const {
  if (n_authors < 1) throw ConfigError("n_authors", "must be >= 1");

  if (const auto* nb = std::get_if<NegativeBinomialLaw>(&papers)) {
    if (nb->minimum < 0) throw ConfigError("papers.minimum", "must be >= 0");
    if (nb->successes < 1) {
      throw ConfigError("papers.successes", "must be >= 1");
    }
    if (!(nb->probability > 0.0 && nb->probability <= 1.0)) {
      throw ConfigError("papers.probability", "must lie in (0, 1]");
    }
  } else if (std::get<ConstantLaw>(papers).value < 0) {
    throw ConfigError("papers.value", "must be >= 0");
  }

  if (const auto* ln = std::get_if<LognormalLaw>(&citations)) {
    if (!std::isfinite(ln->mu) || ln->mu < -10.0 || ln->mu > 15.0) {
      throw ConfigError("citations.mu", "must lie in [-10, 15]");
    }
    if (!(ln->sigma >= 0.0 && ln->sigma <= 5.0)) {
      throw ConfigError("citations.sigma", "must lie in [0, 5]");
    }
    if (!(ln->author_sigma >= 0.0 && ln->author_sigma <= 5.0)) {
      throw ConfigError("citations.author_sigma", "must lie in [0, 5]");
    }
  } else if (std::get<ConstantLaw>(citations).value < 0) {
    throw ConfigError("citations.value", "must be >= 0");
  }

  if (metadata) {
    if (metadata->fields < 1) throw ConfigError("fields", "must be >= 1");
    if (metadata->first_year_from > metadata->first_year_to) {
      throw ConfigError("first_year_from", "must not exceed first_year_to");
    }
    if (metadata->first_year_to > metadata->last_year) {
      throw ConfigError("last_year", "must not precede first_year_to");
    }
    if (!(metadata->cross_field >= 0.0 && metadata->cross_field <= 1.0)) {
      throw ConfigError("cross_field", "must lie in [0, 1]");
    }
  }
}

namespace {

int digits(std::size_t n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

std::string padded(char prefix, std::size_t value, int width) {
  std::string number = std::to_string(value);
  std::string out(1, prefix);
  if (static_cast<int>(number.size()) < width) {
    out.append(static_cast<std::size_t>(width) - number.size(), '0');
  }
  return out + number;
}

// Failures before the first success, by inversion.
Citations geometric(Xoshiro256StarStar& rng, double probability) {
  if (probability >= 1.0) return 0;
  const double u = uniform_unit(rng);
  return static_cast<Citations>(
      std::floor(std::log1p(-u) / std::log1p(-probability)));
}

constexpr double kMaxCitations = 1e12;

}  // namespace

CorpusGenerator::CorpusGenerator(GeneratorConfig config)
    : config_(std::move(config)) {
  config_.validate();
  id_width_ = digits(config_.n_authors - 1);
}

std::string CorpusGenerator::author_id(std::size_t index) const {
  return padded('a', index, id_width_);
}

CitationProfile CorpusGenerator::author(std::size_t index) const {
  // Draw order: paper count, author location, home field and first year,
  // then per paper its citations, field and year.
  Xoshiro256StarStar rng(stream_seed(config_.seed, std::uint64_t{index}));

  Citations p = 0;
  if (const auto* nb = std::get_if<NegativeBinomialLaw>(&config_.papers)) {
    p = nb->minimum;
    for (int s = 0; s < nb->successes; ++s) p += geometric(rng, nb->probability);
  } else {
    p = std::get<ConstantLaw>(config_.papers).value;
  }

  const auto* lognormal = std::get_if<LognormalLaw>(&config_.citations);
  double location = 0.0;
  if (lognormal != nullptr) {
    location = lognormal->mu + lognormal->author_sigma * standard_normal(rng);
  }

  const auto& meta = config_.metadata;
  std::size_t home_field = 0;
  int first_year = 0;
  int field_width = 1;
  if (meta) {
    field_width = digits(static_cast<std::size_t>(meta->fields - 1));
    home_field = uniform_below(rng, static_cast<std::uint64_t>(meta->fields));
    first_year = meta->first_year_from +
                 static_cast<int>(uniform_below(
                     rng, static_cast<std::uint64_t>(meta->first_year_to -
                                                     meta->first_year_from + 1)));
  }

  std::vector<PaperRecord> papers;
  papers.reserve(static_cast<std::size_t>(p));
  for (Citations k = 0; k < p; ++k) {
    PaperRecord paper;
    paper.paper_id = "p" + std::to_string(k + 1);
    if (lognormal != nullptr) {
      const double draw =
          std::exp(location + lognormal->sigma * standard_normal(rng));
      paper.citations =
          static_cast<Citations>(std::floor(std::min(draw, kMaxCitations)));
    } else {
      paper.citations = std::get<ConstantLaw>(config_.citations).value;
    }
    if (meta) {
      std::size_t field = home_field;
      if (uniform_unit(rng) < meta->cross_field) {
        field = uniform_below(rng, static_cast<std::uint64_t>(meta->fields));
      }
      paper.field_id = padded('f', field, field_width);
      paper.pub_year =
          k == 0 ? first_year
                 : first_year + static_cast<int>(uniform_below(
                                    rng, static_cast<std::uint64_t>(
                                             meta->last_year - first_year + 1)));
    }
    papers.push_back(std::move(paper));
  }
  return CitationProfile(author_id(index), std::move(papers));
}

void BaselineAccumulator::add(const CitationProfile& profile) {
  for (const auto& paper : profile.papers()) {
    if (!paper.field_id || !paper.pub_year) continue;
    auto& cell = cells_[CellKey{*paper.field_id, *paper.pub_year}];
    cell.sum += static_cast<double>(paper.citations);
    ++cell.n;
  }
}

BaselineTable BaselineAccumulator::table() const {
  std::map<CellKey, double> entries;
  for (const auto& [key, cell] : cells_) {
    const double mean = cell.sum / static_cast<double>(cell.n);
    entries.emplace(key, mean > 0.0 ? mean : 1.0);
  }
  return BaselineTable(std::move(entries));
}

Corpus generate_corpus(const GeneratorConfig& config) {
  const CorpusGenerator generator(config);
  std::vector<CitationProfile> authors;
  authors.reserve(generator.size());
  BaselineAccumulator baselines;
  for (std::size_t i = 0; i < generator.size(); ++i) {
    authors.push_back(generator.author(i));
    if (config.metadata) baselines.add(authors.back());
  }
  if (!config.metadata) return Corpus(std::move(authors));
  return Corpus(std::move(authors), baselines.table());
}

}  // namespace citemetrics
