#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "citemetrics/bootstrap.hpp"
#include "citemetrics/error.hpp"
#include "citemetrics/indicators.hpp"
#include "citemetrics/ingest.hpp"
#include "citemetrics/profile.hpp"
#include "citemetrics/simulate.hpp"
#include "citemetrics/stats.hpp"
#include "cli/manifest.hpp"

namespace citemetrics::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSchemas = R"(File schemas (comma separated, LF, no quoting; ids match [A-Za-z0-9_-]):
  papers.csv        author_id,paper_id,citations[,field_id][,pub_year]
                    optional columns are all-or-nothing; empty cells are errors
  baselines.csv     field_id,pub_year,mean_citations   (mean > 0, cells unique)
  indicators.csv    author_id,p,c,mc,h,e,r,rm,ncs,mncs,iota_e
                    sorted by author_id; empty ncs/mncs = not computed
  correlations.csv  square matrix, first row/column are indicator names;
                    empty cell = undefined (constant column)
  correlations.json {method, subset, observations, indicators, matrix}
  sweep.csv         size,used,indicator,rho
  intervals.csv     author_id,indicator,point,lo,hi
  ranges.csv        author_id,indicator,range,log_range  (100 = max axis, log10)
  regression.json   {regressions:[{y,x,log_base,slope,intercept,r_squared,
                    n_used,n_excluded,notice}]}
  curves.csv        x,y
  histogram.csv     bin_lo,bin_hi,count
  mega_authors.csv  author_id,p,c,scaled_total,scaled_iota_e
  <command>.manifest.json  flags, seed, sha256 of inputs and outputs
Synthetic corpora from `generate` are labelled synthetic in their manifest.)";

/// Streams into `<path>.tmp` and renames on success.
void emit(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + temp.string() + "'");
    body(out);
    out.flush();
    if (!out) {
      throw std::runtime_error("write failed for '" + temp.string() + "'");
    }
  }
  fs::rename(temp, path);
}

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" +
                             dir.string() + "'");
  }
}

void write_manifest(const fs::path& dir, const RunManifest& manifest) {
  std::string name = manifest.command;
  std::replace(name.begin(), name.end(), ' ', '-');
  write_file_atomic(dir / (name + ".manifest.json"), manifest.dump());
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Indicator> parse_indicator_list(const std::string& text) {
  std::vector<Indicator> out;
  for (const auto& name : split_list(text)) {
    const auto indicator = parse_indicator(name);
    if (!indicator) {
      throw ConfigError("--indicators", "unknown indicator '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), *indicator) == out.end()) {
      out.push_back(*indicator);
    }
  }
  if (out.empty()) throw ConfigError("--indicators", "list is empty");
  return out;
}

template <typename T>
nlohmann::ordered_json or_null(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json();
}

std::string bound_name(Bound bound) {
  return bound == Bound::AtLeast ? "at-least" : "more-than";
}

const std::map<std::string, Bound> kBounds = {{"at-least", Bound::AtLeast},
                                              {"more-than", Bound::MoreThan}};

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string baselines;
  Citations min_papers = 20;
  Bound papers_bound = Bound::AtLeast;
  bool papers_strict = false;
  Citations min_citations = 0;
  std::optional<int> first_year_from;
  std::optional<int> first_year_to;
  bool require_normalized = false;
  std::string output;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.first_year_from.has_value() != a.first_year_to.has_value()) {
    throw ConfigError("--first-year-from/--first-year-to",
                      "give both bounds or neither");
  }
  if (a.require_normalized && a.baselines.empty()) {
    throw ConfigError("--require-normalized", "needs --baselines");
  }
  const std::optional<fs::path> baselines =
      a.baselines.empty() ? std::nullopt : std::optional<fs::path>(a.baselines);
  const Corpus corpus = load_corpus(a.input, baselines);

  AuthorFilter filter;
  filter.min_papers = a.min_papers;
  filter.papers_bound = a.papers_strict ? Bound::MoreThan : a.papers_bound;
  filter.min_citations = a.min_citations;
  if (a.first_year_from) {
    filter.first_year = YearRange{*a.first_year_from, *a.first_year_to};
  }
  const auto filtered = filter_authors(corpus, filter);
  if (filtered.missing_year_rejections > 0) {
    err << "warning: " << filtered.missing_year_rejections
        << " authors rejected for lacking pub_year on every paper\n";
  }

  const auto vectors = compute_corpus(filtered.corpus);
  if (a.require_normalized) {
    for (const auto& v : vectors) {
      if (!v.ncs) {
        throw ValidationError("author '" + v.author_id +
                              "' has no field/year metadata; cannot compute "
                              "normalized indicators");
      }
    }
  }

  const fs::path dir = a.output;
  prepare_output_dir(dir);
  const auto path = dir / "indicators.csv";
  emit(path, [&](std::ostream& o) { write_indicators(o, vectors); });

  RunManifest manifest;
  manifest.command = "compute";
  manifest.parameters = {
      {"min_papers", a.min_papers},
      {"papers_bound", bound_name(filter.papers_bound)},
      {"min_citations", a.min_citations},
      {"first_year_from", or_null(a.first_year_from)},
      {"first_year_to", or_null(a.first_year_to)},
      {"require_normalized", a.require_normalized}};
  manifest.add_input("papers", a.input);
  if (baselines) manifest.add_input("baselines", *baselines);
  manifest.add_output("indicators", path);
  write_manifest(dir, manifest);

  out << "compute: " << filtered.corpus.size() << " of " << corpus.size()
      << " authors retained -> " << path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct CorrelateArgs {
  std::string indicators;
  std::string method = "pearson";
  std::optional<std::size_t> top_n;
  std::string by;
  std::string sweep_sizes;
  std::string against;
  std::string output;
};

int cmd_correlate(const CorrelateArgs& a, std::ostream& out,
                  std::ostream& err) {
  const auto method = parse_method(a.method);
  if (!method) throw ConfigError("--method", "expected pearson or spearman");
  if ((a.top_n || !a.sweep_sizes.empty()) && a.by.empty()) {
    throw ConfigError("--by", "required with --top-n or --sweep-sizes");
  }

  const auto vectors = load_indicators(a.indicators);
  const auto full = IndicatorMatrix::from_vectors(vectors);
  if (!full.find("ncs") && !vectors.empty() &&
      std::any_of(vectors.begin(), vectors.end(),
                  [](const IndicatorVector& v) { return v.ncs.has_value(); })) {
    err << "warning: ncs/mncs missing for some authors; columns dropped\n";
  }
  if (!a.by.empty() && !full.find(a.by)) {
    throw ConfigError("--by", "no indicator column '" + a.by + "'");
  }

  Warnings warnings;
  IndicatorMatrix matrix = full;
  std::optional<TopNSubset> subset;
  if (a.top_n) {
    if (*a.top_n == 0) throw ConfigError("--top-n", "must be >= 1");
    matrix = top_n_subset(full, a.by, *a.top_n, &warnings);
    subset = TopNSubset{a.by, *a.top_n};
  }
  auto report = correlation_matrix(matrix, *method);
  report.subset = subset;
  for (std::size_t i = 0; i < report.names.size(); ++i) {
    if (!report.matrix[i][i]) {
      warnings.push_back("indicator '" + report.names[i] +
                         "' is constant; its correlations are undefined");
    }
  }

  const fs::path dir = a.output;
  prepare_output_dir(dir);
  RunManifest manifest;
  manifest.command = "correlate";
  manifest.parameters = {{"method", a.method},
                         {"top_n", or_null(a.top_n)},
                         {"by", a.by},
                         {"sweep_sizes", a.sweep_sizes},
                         {"against", a.against}};
  manifest.add_input("indicators", a.indicators);

  const auto csv = dir / "correlations.csv";
  const auto json = dir / "correlations.json";
  emit(csv, [&](std::ostream& o) { write_correlations_csv(o, report); });
  emit(json, [&](std::ostream& o) { write_correlations_json(o, report); });
  manifest.add_output("correlations_csv", csv);
  manifest.add_output("correlations_json", json);

  if (!a.sweep_sizes.empty()) {
    std::vector<std::size_t> sizes;
    for (const auto& item : split_list(a.sweep_sizes)) {
      try {
        std::size_t used = 0;
        sizes.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ConfigError("--sweep-sizes", "'" + item + "' is not a size");
      }
    }
    std::vector<std::string> against = split_list(a.against);
    if (against.empty()) {
      for (const auto& column : full.columns()) {
        if (column.name != a.by) against.push_back(column.name);
      }
    }
    for (const auto& name : against) {
      if (!full.find(name)) {
        throw ConfigError("--against", "no indicator column '" + name + "'");
      }
    }
    const auto cells = sample_size_sweep(full, a.by, sizes, against, &warnings);
    for (const auto& cell : cells) {
      if (!cell.rho) {
        warnings.push_back("rho undefined for " + cell.indicator + " at size " +
                           std::to_string(cell.size));
      }
    }
    const auto sweep = dir / "sweep.csv";
    emit(sweep, [&](std::ostream& o) { write_sweep(o, cells); });
    manifest.add_output("sweep", sweep);
  }
  write_manifest(dir, manifest);

  for (const auto& w : warnings) err << "warning: " << w << "\n";
  out << "correlate: " << method_name(*method) << " over "
      << report.observations << " authors -> " << csv.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct BootstrapArgs {
  std::string input;
  std::string baselines;
  std::string indicators = "iota_e,c,r";
  std::size_t replications = 1000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  Citations min_papers = 50;
  Bound papers_bound = Bound::MoreThan;
  Citations min_citations = 1;
  unsigned threads = 0;
  std::string output;
};

int cmd_bootstrap(const BootstrapArgs& a, std::ostream& out,
                  std::ostream& err) {
  const auto indicators = parse_indicator_list(a.indicators);
  const std::optional<fs::path> baselines =
      a.baselines.empty() ? std::nullopt : std::optional<fs::path>(a.baselines);
  const Corpus corpus = load_corpus(a.input, baselines);

  AuthorFilter filter;
  filter.min_papers = a.min_papers;
  filter.papers_bound = a.papers_bound;
  filter.min_citations = a.min_citations;
  const auto subset = filter_authors(corpus, filter).corpus;

  ComparisonOptions options;
  options.bootstrap = {a.replications, a.confidence, a.seed};
  options.threads = a.threads;
  const auto result = stability_comparison(subset, indicators, options);

  const fs::path dir = a.output;
  prepare_output_dir(dir);
  RunManifest manifest;
  manifest.command = "bootstrap";
  manifest.seed = a.seed;
  manifest.parameters = {{"indicators", a.indicators},
                         {"replications", a.replications},
                         {"confidence", a.confidence},
                         {"min_papers", a.min_papers},
                         {"papers_bound", bound_name(a.papers_bound)},
                         {"min_citations", a.min_citations},
                         {"percentile", "type7"},
                         {"generator", "xoshiro256**"}};
  manifest.add_input("papers", a.input);
  if (baselines) manifest.add_input("baselines", *baselines);

  const auto intervals = dir / "intervals.csv";
  const auto ranges = dir / "ranges.csv";
  emit(intervals, [&](std::ostream& o) { write_intervals(o, result.intervals); });
  emit(ranges, [&](std::ostream& o) { write_ranges(o, result.ranges); });
  manifest.add_output("intervals", intervals);
  manifest.add_output("ranges", ranges);
  if (!result.regressions.empty()) {
    const auto regression = dir / "regression.json";
    emit(regression, [&](std::ostream& o) {
      write_regressions_json(o, result.regressions);
    });
    manifest.add_output("regression", regression);
  }
  write_manifest(dir, manifest);

  out << "bootstrap: " << subset.size() << " authors, " << a.replications
      << " replications\n";
  for (const auto& r : result.regressions) {
    out << "  log-range " << indicator_name(r.y) << " ~ "
        << indicator_name(r.x) << ": ";
    if (r.fit) {
      out << "slope " << format_real(r.fit->slope) << ", R^2 "
          << format_real(r.fit->r_squared) << ", n " << r.n_used;
    } else {
      out << "skipped";
    }
    out << "\n";
    if (!r.notice.empty()) err << "notice: " << r.notice << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  Citations total = 100;
  Citations sum_step = 1;
  double iota = 100.0;
  double iota_step = 0.01;
  std::string input;
  double target = 1e6;
  Citations min_papers = 20;
  Citations min_citations = 100;
  std::size_t bins = 50;
  std::string output;
};

int cmd_two_paper_sum(const SimulateArgs& a, std::ostream& out) {
  const auto points = two_paper_fixed_sum(a.total, a.sum_step);
  const fs::path dir = a.output;
  prepare_output_dir(dir);
  const auto path = dir / "curves.csv";
  emit(path, [&](std::ostream& o) { write_curve(o, points); });
  RunManifest manifest;
  manifest.command = "simulate two-paper-sum";
  manifest.parameters = {{"total", a.total}, {"step", a.sum_step}};
  manifest.add_output("curve", path);
  write_manifest(dir, manifest);
  out << "two-paper-sum: " << points.size() << " points -> " << path.string()
      << "\n";
  return 0;
}

int cmd_two_paper_iota(const SimulateArgs& a, std::ostream& out) {
  const auto points = two_paper_fixed_iota(a.iota, a.iota_step);
  const fs::path dir = a.output;
  prepare_output_dir(dir);
  const auto path = dir / "curves.csv";
  emit(path, [&](std::ostream& o) { write_curve(o, points); });
  RunManifest manifest;
  manifest.command = "simulate two-paper-iota";
  manifest.parameters = {{"iota", a.iota}, {"step", a.iota_step}};
  manifest.add_output("curve", path);
  write_manifest(dir, manifest);

  const auto peak = std::max_element(
      points.begin(), points.end(),
      [](const CurvePoint& l, const CurvePoint& r) { return l.y < r.y; });
  out << "two-paper-iota: " << points.size() << " points, max total "
      << format_real(peak->y) << " at " << format_real(peak->x) << " -> "
      << path.string() << "\n";
  return 0;
}

int cmd_mega(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_corpus(a.input);
  MegaOptions options;
  options.target_total = a.target;
  options.min_papers = a.min_papers;
  options.min_citations = a.min_citations;
  options.bins = a.bins;
  const auto result = mega_citation_normalization(corpus, options);
  if (result.authors.empty()) {
    err << "warning: no author passes P >= " << a.min_papers << " and C >= "
        << a.min_citations << "; histogram is empty\n";
  }

  const fs::path dir = a.output;
  prepare_output_dir(dir);
  const auto hist = dir / "histogram.csv";
  const auto authors = dir / "mega_authors.csv";
  emit(hist, [&](std::ostream& o) { write_histogram(o, result.histogram); });
  emit(authors, [&](std::ostream& o) { write_mega_authors(o, result.authors); });

  RunManifest manifest;
  manifest.command = "simulate mega";
  manifest.parameters = {{"target", a.target},
                         {"min_papers", a.min_papers},
                         {"min_citations", a.min_citations},
                         {"bins", a.bins}};
  manifest.add_input("papers", a.input);
  manifest.add_output("histogram", hist);
  manifest.add_output("authors", authors);
  write_manifest(dir, manifest);
  out << "mega: " << result.authors.size() << " authors normalized, "
      << result.excluded << " excluded -> " << hist.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::size_t authors = 1000;
  std::uint64_t seed = 0;
  std::string papers_law = "negbin";
  NegativeBinomialLaw negbin;
  Citations papers_value = 20;
  std::string citations_law = "lognormal";
  LognormalLaw lognormal;
  Citations citations_value = 5;
  MetadataConfig metadata;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GeneratorConfig config;
  config.n_authors = a.authors;
  config.seed = a.seed;
  if (a.papers_law == "negbin") {
    config.papers = a.negbin;
  } else if (a.papers_law == "constant") {
    config.papers = ConstantLaw{a.papers_value};
  } else {
    throw ConfigError("--papers-law", "expected negbin or constant");
  }
  if (a.citations_law == "lognormal") {
    config.citations = a.lognormal;
  } else if (a.citations_law == "constant") {
    config.citations = ConstantLaw{a.citations_value};
  } else {
    throw ConfigError("--citations-law", "expected lognormal or constant");
  }
  if (a.metadata.fields > 0) config.metadata = a.metadata;
  const CorpusGenerator generator(config);

  const fs::path dir = a.output;
  prepare_output_dir(dir);
  const auto papers = dir / "papers.csv";
  BaselineAccumulator accumulator;
  std::size_t rows = 0;
  const bool meta = config.metadata.has_value();
  emit(papers, [&](std::ostream& o) {
    write_papers_header(o, meta, meta);
    for (std::size_t i = 0; i < generator.size(); ++i) {
      const auto profile = generator.author(i);
      write_papers_rows(o, profile, meta, meta);
      rows += profile.paper_count();
      if (meta) accumulator.add(profile);
    }
  });

  RunManifest manifest;
  manifest.command = "generate";
  manifest.seed = a.seed;
  manifest.parameters = {{"synthetic", true},
                         {"authors", a.authors},
                         {"papers_law", a.papers_law},
                         {"citations_law", a.citations_law}};
  if (a.papers_law == "negbin") {
    manifest.parameters["papers_minimum"] = a.negbin.minimum;
    manifest.parameters["papers_successes"] = a.negbin.successes;
    manifest.parameters["papers_probability"] = a.negbin.probability;
  } else {
    manifest.parameters["papers_value"] = a.papers_value;
  }
  if (a.citations_law == "lognormal") {
    manifest.parameters["citations_mu"] = a.lognormal.mu;
    manifest.parameters["citations_sigma"] = a.lognormal.sigma;
    manifest.parameters["citations_author_sigma"] = a.lognormal.author_sigma;
  } else {
    manifest.parameters["citations_value"] = a.citations_value;
  }
  manifest.parameters["fields"] = a.metadata.fields;
  if (meta) {
    manifest.parameters["first_year_from"] = a.metadata.first_year_from;
    manifest.parameters["first_year_to"] = a.metadata.first_year_to;
    manifest.parameters["last_year"] = a.metadata.last_year;
    manifest.parameters["cross_field"] = a.metadata.cross_field;
  }
  manifest.add_output("papers", papers);
  if (meta) {
    const auto baselines = dir / "baselines.csv";
    const auto table = accumulator.table();
    emit(baselines, [&](std::ostream& o) { write_baselines(o, table); });
    manifest.add_output("baselines", baselines);
  }
  write_manifest(dir, manifest);
  out << "generate: " << generator.size() << " synthetic authors, " << rows
      << " papers -> " << papers.string() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"citemetrics: author-level citation indicators, bootstrap "
               "stability intervals, correlation analyses and ordinality "
               "simulations"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute all indicators per author");
  c->add_option("--input", compute.input, "papers.csv")->required();
  c->add_option("--baselines", compute.baselines, "baselines.csv (enables ncs/mncs)");
  c->add_option("--min-papers", compute.min_papers, "Paper-count threshold")
      ->capture_default_str();
  c->add_option("--papers-bound", compute.papers_bound,
                "Comparator for --min-papers")
      ->transform(CLI::CheckedTransformer(kBounds, CLI::ignore_case))
      ->default_str("at-least");
  c->add_flag("--papers-strict", compute.papers_strict,
              "Shorthand for --papers-bound more-than");
  c->add_option("--min-citations", compute.min_citations,
                "Keep authors with at least this many citations")
      ->capture_default_str();
  c->add_option("--first-year-from", compute.first_year_from,
                "Earliest allowed first-publication year");
  c->add_option("--first-year-to", compute.first_year_to,
                "Latest allowed first-publication year");
  c->add_flag("--require-normalized", compute.require_normalized,
              "Fail unless ncs/mncs can be computed for every author");
  c->add_option("--output", compute.output, "Output directory")->required();

  CorrelateArgs correlate;
  auto* r = app.add_subcommand("correlate",
                               "Pairwise correlation matrix of indicators");
  r->add_option("--indicators", correlate.indicators, "indicators.csv")
      ->required();
  r->add_option("--method", correlate.method, "pearson or spearman")
      ->check(CLI::IsMember({"pearson", "spearman"}))
      ->capture_default_str();
  r->add_option("--top-n", correlate.top_n,
                "Restrict to the n top-ranked authors by --by (e.g. 10000)");
  r->add_option("--by", correlate.by, "Ranking indicator for --top-n/--sweep-sizes");
  r->add_option("--sweep-sizes", correlate.sweep_sizes,
                "Comma-separated ascending subset sizes for a Spearman sweep");
  r->add_option("--against", correlate.against,
                "Comma-separated indicators for the sweep (default: all)");
  r->add_option("--output", correlate.output, "Output directory")->required();

  BootstrapArgs boot;
  auto* b = app.add_subcommand("bootstrap",
                               "Bootstrap stability intervals per author");
  b->add_option("--input", boot.input, "papers.csv")->required();
  b->add_option("--baselines", boot.baselines, "baselines.csv (for ncs/mncs)");
  b->add_option("--indicators", boot.indicators, "Comma-separated indicators")
      ->capture_default_str();
  b->add_option("--replications", boot.replications)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  b->add_option("--confidence", boot.confidence)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  b->add_option("--seed", boot.seed, "64-bit unsigned seed")->capture_default_str();
  b->add_option("--min-papers", boot.min_papers)->capture_default_str();
  b->add_option("--papers-bound", boot.papers_bound, "Comparator for --min-papers")
      ->transform(CLI::CheckedTransformer(kBounds, CLI::ignore_case))
      ->default_str("more-than");
  b->add_option("--min-citations", boot.min_citations)->capture_default_str();
  b->add_option("--threads", boot.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  b->add_option("--output", boot.output, "Output directory")->required();

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Ordinality experiments");
  s->require_subcommand(1);
  auto* sum = s->add_subcommand("two-paper-sum",
                                "Euclidean index of two papers with a fixed total");
  sum->add_option("--total", sim.total)->capture_default_str();
  sum->add_option("--step", sim.sum_step)->capture_default_str();
  sum->add_option("--output", sim.output, "Output directory")->required();
  auto* iota = s->add_subcommand(
      "two-paper-iota", "Total citations of two papers with a fixed Euclidean index");
  iota->add_option("--iota", sim.iota)->capture_default_str();
  iota->add_option("--step", sim.iota_step)->capture_default_str();
  iota->add_option("--output", sim.output, "Output directory")->required();
  auto* mega = s->add_subcommand(
      "mega", "Rescale every author to a common citation total");
  mega->add_option("--input", sim.input, "papers.csv")->required();
  mega->add_option("--target", sim.target)->capture_default_str();
  mega->add_option("--min-papers", sim.min_papers)->capture_default_str();
  mega->add_option("--min-citations", sim.min_citations)->capture_default_str();
  mega->add_option("--bins", sim.bins)->check(CLI::PositiveNumber)->capture_default_str();
  mega->add_option("--output", sim.output, "Output directory")->required();

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a seeded synthetic corpus");
  g->add_option("--authors", gen.authors)->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--seed", gen.seed, "64-bit unsigned seed")->capture_default_str();
  g->add_option("--papers-law", gen.papers_law, "negbin or constant")
      ->capture_default_str();
  g->add_option("--papers-min", gen.negbin.minimum)->capture_default_str();
  g->add_option("--papers-successes", gen.negbin.successes)->capture_default_str();
  g->add_option("--papers-probability", gen.negbin.probability)->capture_default_str();
  g->add_option("--papers-value", gen.papers_value, "Paper count for the constant law")
      ->capture_default_str();
  g->add_option("--citations-law", gen.citations_law, "lognormal or constant")
      ->capture_default_str();
  g->add_option("--citations-mu", gen.lognormal.mu)->capture_default_str();
  g->add_option("--citations-sigma", gen.lognormal.sigma)->capture_default_str();
  g->add_option("--citations-author-sigma", gen.lognormal.author_sigma)
      ->capture_default_str();
  g->add_option("--citations-value", gen.citations_value,
                "Per-paper count for the constant law")
      ->capture_default_str();
  g->add_option("--fields", gen.metadata.fields,
                "Number of synthetic fields; 0 omits field/year columns")
      ->capture_default_str();
  g->add_option("--first-year-from", gen.metadata.first_year_from)->capture_default_str();
  g->add_option("--first-year-to", gen.metadata.first_year_to)->capture_default_str();
  g->add_option("--last-year", gen.metadata.last_year)->capture_default_str();
  g->add_option("--cross-field", gen.metadata.cross_field)->capture_default_str();
  g->add_option("--output", gen.output, "Output directory")->required();

  std::vector<const char*> argv{"citemetrics"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (r->parsed()) return cmd_correlate(correlate, out, err);
    if (b->parsed()) return cmd_bootstrap(boot, out, err);
    if (sum->parsed()) return cmd_two_paper_sum(sim, out);
    if (iota->parsed()) return cmd_two_paper_iota(sim, out);
    if (mega->parsed()) return cmd_mega(sim, out, err);
    if (g->parsed()) return cmd_generate(gen, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace citemetrics::cli
