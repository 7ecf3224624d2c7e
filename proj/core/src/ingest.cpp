#include "citemetrics/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "citemetrics/error.hpp"

namespace citemetrics {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<double> parse_real(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

/// Line-oriented reader that tracks 1-based row numbers and tolerates only a
/// single trailing newline.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string_view source)
      : in_(in), source_(source) {}

  std::vector<std::string> header(std::span<const std::string_view> known) {
    std::string line;
    if (!std::getline(in_, line)) fail(1, "", "missing header row");
    row_ = 1;
    std::vector<std::string> names;
    for (auto cell : split(line)) {
      if (std::find(known.begin(), known.end(), cell) == known.end()) {
        fail(1, std::string(cell), "unknown column");
      }
      if (std::find(names.begin(), names.end(), cell) != names.end()) {
        fail(1, std::string(cell), "duplicate column");
      }
      names.emplace_back(cell);
    }
    return names;
  }

  /// Next data row split into exactly `width` cells, or nullopt at EOF.
  std::optional<std::vector<std::string_view>> next(std::size_t width) {
    if (!std::getline(in_, line_)) return std::nullopt;
    ++row_;
    if (line_.empty()) {
      if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
      fail(row_, "", "empty row");
    }
    auto cells = split(line_);
    if (cells.size() != width) {
      fail(row_, "", "expected " + std::to_string(width) + " cells, found " +
                         std::to_string(cells.size()));
    }
    return cells;
  }

  std::size_t row() const noexcept { return row_; }

  [[noreturn]] void fail(std::size_t row, const std::string& column,
                         const std::string& reason) const {
    throw ParseError(source_, row, column, reason);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string line_;
  std::size_t row_ = 0;
};

std::optional<std::size_t> position(const std::vector<std::string>& names,
                                    std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t require(const CsvReader& reader,
                    const std::vector<std::string>& names,
                    std::string_view name) {
  const auto at = position(names, name);
  if (!at) reader.fail(1, std::string(name), "required column missing");
  return *at;
}

std::string identifier(const CsvReader& reader, std::string_view cell,
                       std::string_view column) {
  if (cell.empty()) reader.fail(reader.row(), std::string(column), "empty cell");
  if (!valid_identifier(cell)) {
    reader.fail(reader.row(), std::string(column),
                "identifier '" + std::string(cell) +
                    "' has characters outside [A-Za-z0-9_-]");
  }
  return std::string(cell);
}

int year(const CsvReader& reader, std::string_view cell,
         std::string_view column) {
  if (cell.empty()) reader.fail(reader.row(), std::string(column), "empty cell");
  const auto value = parse_int<int>(cell);
  if (!value) {
    reader.fail(reader.row(), std::string(column),
                "'" + std::string(cell) + "' is not an integer year");
  }
  return *value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

bool valid_identifier(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
           (ch >= '0' && ch <= '9') || ch == '_' || ch == '-';
  });
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_exact(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

BaselineTable read_baselines(std::istream& in, std::string_view name) {
  constexpr std::string_view kKnown[] = {"field_id", "pub_year",
                                         "mean_citations"};
  CsvReader reader(in, name);
  const auto names = reader.header(kKnown);
  const auto field_at = require(reader, names, "field_id");
  const auto year_at = require(reader, names, "pub_year");
  const auto mean_at = require(reader, names, "mean_citations");

  std::map<CellKey, double> entries;
  std::map<CellKey, std::size_t> rows;
  while (auto cells = reader.next(names.size())) {
    CellKey key{identifier(reader, (*cells)[field_at], "field_id"),
                year(reader, (*cells)[year_at], "pub_year")};
    const auto mean = parse_real((*cells)[mean_at]);
    if (!mean || !(*mean > 0.0)) {
      reader.fail(reader.row(), "mean_citations",
                  "'" + std::string((*cells)[mean_at]) +
                      "' is not a positive real");
    }
    auto [it, inserted] = rows.emplace(key, reader.row());
    if (!inserted) {
      reader.fail(reader.row(), "",
                  "duplicate cell (" + key.field_id + ", " +
                      std::to_string(key.pub_year) + ") at rows " +
                      std::to_string(it->second) + " and " +
                      std::to_string(reader.row()));
    }
    entries.emplace(std::move(key), *mean);
  }
  return BaselineTable(std::move(entries));
}

Corpus read_corpus(std::istream& papers, std::istream* baselines,
                   std::string_view papers_name,
                   std::string_view baselines_name) {
  constexpr std::string_view kKnown[] = {"author_id", "paper_id", "citations",
                                         "field_id", "pub_year"};
  CsvReader reader(papers, papers_name);
  const auto names = reader.header(kKnown);
  const auto author_at = require(reader, names, "author_id");
  const auto paper_at = require(reader, names, "paper_id");
  const auto citations_at = require(reader, names, "citations");
  const auto field_at = position(names, "field_id");
  const auto year_at = position(names, "pub_year");

  struct Pending {
    std::string author_id;
    std::vector<PaperRecord> papers;
    std::vector<std::size_t> rows;
  };
  std::vector<Pending> authors;
  std::unordered_map<std::string, std::size_t> author_index;

  while (auto cells = reader.next(names.size())) {
    const auto& row = *cells;
    auto author_id = identifier(reader, row[author_at], "author_id");

    PaperRecord paper;
    paper.paper_id = identifier(reader, row[paper_at], "paper_id");
    const auto cell = row[citations_at];
    if (cell.empty()) reader.fail(reader.row(), "citations", "empty cell");
    const auto count = parse_int<Citations>(cell);
    if (!count) {
      reader.fail(reader.row(), "citations",
                  "'" + std::string(cell) + "' is not an integer");
    }
    if (*count < 0) {
      reader.fail(reader.row(), "citations",
                  "negative citation count " + std::string(cell));
    }
    paper.citations = *count;
    if (field_at) paper.field_id = identifier(reader, row[*field_at], "field_id");
    if (year_at) paper.pub_year = year(reader, row[*year_at], "pub_year");

    auto [it, inserted] = author_index.try_emplace(author_id, authors.size());
    if (inserted) authors.push_back(Pending{std::move(author_id), {}, {}});
    auto& pending = authors[it->second];
    pending.papers.push_back(std::move(paper));
    pending.rows.push_back(reader.row());
  }

  std::vector<CitationProfile> profiles;
  profiles.reserve(authors.size());
  for (auto& pending : authors) {
    std::vector<std::size_t> order(pending.papers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pending.papers[a].paper_id < pending.papers[b].paper_id;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto& a = pending.papers[order[i - 1]];
      const auto& b = pending.papers[order[i]];
      if (a.paper_id == b.paper_id) {
        const auto first = std::min(pending.rows[order[i - 1]],
                                    pending.rows[order[i]]);
        const auto second = std::max(pending.rows[order[i - 1]],
                                     pending.rows[order[i]]);
        throw ParseError(std::string(papers_name), second, "",
                         "duplicate (author_id, paper_id) (" +
                             pending.author_id + ", " + a.paper_id +
                             ") at rows " + std::to_string(first) + " and " +
                             std::to_string(second));
      }
    }
    profiles.emplace_back(std::move(pending.author_id),
                          std::move(pending.papers));
  }

  std::optional<BaselineTable> table;
  if (baselines != nullptr) table = read_baselines(*baselines, baselines_name);
  return Corpus(std::move(profiles), std::move(table));
}

Corpus load_corpus(const std::filesystem::path& papers,
                   const std::optional<std::filesystem::path>& baselines) {
  auto papers_in = open_input(papers);
  if (!baselines) return read_corpus(papers_in, nullptr, papers.string());
  auto baselines_in = open_input(*baselines);
  return read_corpus(papers_in, &baselines_in, papers.string(),
                     baselines->string());
}

void write_papers_header(std::ostream& out, bool field_id, bool pub_year) {
  out << "author_id,paper_id,citations";
  if (field_id) out << ",field_id";
  if (pub_year) out << ",pub_year";
  out << '\n';
}

void write_papers_rows(std::ostream& out, const CitationProfile& profile,
                       bool field_id, bool pub_year) {
  for (const auto& paper : profile.papers()) {
    out << profile.author_id() << ',' << paper.paper_id << ','
        << paper.citations;
    if (field_id) out << ',' << paper.field_id.value();
    if (pub_year) out << ',' << paper.pub_year.value();
    out << '\n';
  }
}

void write_papers(std::ostream& out, const Corpus& corpus) {
  std::size_t total = 0;
  std::size_t with_field = 0;
  std::size_t with_year = 0;
  for (const auto& author : corpus.authors()) {
    if (!valid_identifier(author.author_id())) {
      throw ValidationError("author_id '" + author.author_id() +
                            "' cannot be written without quoting");
    }
    for (const auto& paper : author.papers()) {
      if (!valid_identifier(paper.paper_id) ||
          (paper.field_id && !valid_identifier(*paper.field_id))) {
        throw ValidationError("identifier in paper '" + paper.paper_id +
                              "' cannot be written without quoting");
      }
      ++total;
      with_field += paper.field_id.has_value();
      with_year += paper.pub_year.has_value();
    }
  }
  if ((with_field != 0 && with_field != total) ||
      (with_year != 0 && with_year != total)) {
    throw ValidationError(
        "field_id/pub_year must be present on all papers or on none");
  }
  const bool field = total > 0 && with_field == total;
  const bool year = total > 0 && with_year == total;
  write_papers_header(out, field, year);
  for (const auto& author : corpus.authors()) {
    write_papers_rows(out, author, field, year);
  }
}

void write_baselines(std::ostream& out, const BaselineTable& baselines) {
  out << "field_id,pub_year,mean_citations\n";
  for (const auto& [key, value] : baselines.entries()) {
    out << key.field_id << ',' << key.pub_year << ',' << format_exact(value)
        << '\n';
  }
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& papers,
                  const std::optional<std::filesystem::path>& baselines) {
  std::ostringstream papers_out;
  write_papers(papers_out, corpus);
  write_file_atomic(papers, papers_out.str());
  if (baselines) {
    if (!corpus.baselines()) {
      throw ValidationError("corpus has no baseline table to write");
    }
    std::ostringstream baselines_out;
    write_baselines(baselines_out, *corpus.baselines());
    write_file_atomic(*baselines, baselines_out.str());
  }
}

namespace {

constexpr std::string_view kIndicatorColumns[] = {
    "author_id", "p", "c", "mc", "h", "e", "r", "rm", "ncs", "mncs", "iota_e"};

}  // namespace

void write_indicators(std::ostream& out,
                      std::span<const IndicatorVector> vectors) {
  for (std::size_t i = 0; i < std::size(kIndicatorColumns); ++i) {
    out << (i ? "," : "") << kIndicatorColumns[i];
  }
  out << '\n';
  std::vector<const IndicatorVector*> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(&v);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    return a->author_id < b->author_id;
  });
  const auto optional_real = [](const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
  };
  for (const auto* v : rows) {
    out << v->author_id << ',' << v->p << ',' << v->c << ','
        << format_real(v->mc) << ',' << v->h << ',' << format_real(v->e) << ','
        << format_real(v->r) << ',' << format_real(v->rm) << ','
        << optional_real(v->ncs) << ',' << optional_real(v->mncs) << ','
        << format_real(v->iota_e) << '\n';
  }
}

void write_indicators(std::span<const IndicatorVector> vectors,
                      const std::filesystem::path& path) {
  std::ostringstream out;
  write_indicators(out, vectors);
  write_file_atomic(path, out.str());
}

std::vector<IndicatorVector> read_indicators(std::istream& in,
                                             std::string_view name) {
  CsvReader reader(in, name);
  const auto names = reader.header(kIndicatorColumns);
  if (names.size() != std::size(kIndicatorColumns)) {
    reader.fail(1, "", "indicator files need all of author_id,p,c,mc,h,e,r,"
                       "rm,ncs,mncs,iota_e");
  }
  const auto at = [&](std::string_view column) {
    return require(reader, names, column);
  };
  const auto integer = [&](std::string_view cell, std::string_view column) {
    const auto value = parse_int<Citations>(cell);
    if (!value || *value < 0) {
      reader.fail(reader.row(), std::string(column),
                  "'" + std::string(cell) + "' is not a non-negative integer");
    }
    return *value;
  };
  const auto real = [&](std::string_view cell, std::string_view column) {
    const auto value = parse_real(cell);
    if (!value) {
      reader.fail(reader.row(), std::string(column),
                  "'" + std::string(cell) + "' is not a real number");
    }
    return *value;
  };
  const auto optional_real =
      [&](std::string_view cell,
          std::string_view column) -> std::optional<double> {
    if (cell.empty()) return std::nullopt;
    return real(cell, column);
  };

  std::vector<IndicatorVector> out;
  while (auto cells = reader.next(names.size())) {
    const auto& row = *cells;
    IndicatorVector v;
    v.author_id = identifier(reader, row[at("author_id")], "author_id");
    v.p = integer(row[at("p")], "p");
    v.c = integer(row[at("c")], "c");
    v.mc = real(row[at("mc")], "mc");
    v.h = integer(row[at("h")], "h");
    v.e = real(row[at("e")], "e");
    v.r = real(row[at("r")], "r");
    v.rm = real(row[at("rm")], "rm");
    v.ncs = optional_real(row[at("ncs")], "ncs");
    v.mncs = optional_real(row[at("mncs")], "mncs");
    v.iota_e = real(row[at("iota_e")], "iota_e");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IndicatorVector> load_indicators(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_indicators(in, path.string());
}

void write_correlations_csv(std::ostream& out,
                            const CorrelationReport& report) {
  out << "indicator";
  for (const auto& name : report.names) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < report.names.size(); ++i) {
    out << report.names[i];
    for (const auto& cell : report.matrix[i]) {
      out << ',';
      if (cell) out << format_real(*cell);
    }
    out << '\n';
  }
}

void write_correlations_json(std::ostream& out,
                             const CorrelationReport& report) {
  ordered_json doc;
  doc["method"] = std::string(method_name(report.method));
  if (report.subset) {
    doc["subset"] = {{"top_n", report.subset->n}, {"by", report.subset->by}};
  } else {
    doc["subset"] = "all";
  }
  doc["observations"] = report.observations;
  doc["indicators"] = report.names;
  ordered_json matrix = ordered_json::object();
  for (std::size_t i = 0; i < report.names.size(); ++i) {
    ordered_json row = ordered_json::object();
    for (std::size_t j = 0; j < report.names.size(); ++j) {
      const auto& cell = report.matrix[i][j];
      row[report.names[j]] = cell ? ordered_json(*cell) : ordered_json(nullptr);
    }
    matrix[report.names[i]] = std::move(row);
  }
  doc["matrix"] = std::move(matrix);
  out << doc.dump(2) << '\n';
}

void write_sweep(std::ostream& out, std::span<const SweepCell> cells) {
  out << "size,used,indicator,rho\n";
  for (const auto& cell : cells) {
    out << cell.size << ',' << cell.used << ',' << cell.indicator << ',';
    if (cell.rho) out << format_real(*cell.rho);
    out << '\n';
  }
}

void write_intervals(std::ostream& out,
                     std::span<const StabilityInterval> intervals) {
  out << "author_id,indicator,point,lo,hi\n";
  for (const auto& interval : intervals) {
    out << interval.author_id << ',' << indicator_name(interval.indicator)
        << ',' << format_real(interval.point) << ','
        << format_real(interval.lo) << ',' << format_real(interval.hi) << '\n';
  }
}

void write_ranges(std::ostream& out, std::span<const RescaledRange> ranges) {
  out << "author_id,indicator,range,log_range\n";
  for (const auto& range : ranges) {
    out << range.author_id << ',' << indicator_name(range.indicator) << ','
        << format_real(range.range) << ',';
    if (range.log_range) out << format_real(*range.log_range);
    out << '\n';
  }
}

void write_regressions_json(std::ostream& out,
                            std::span<const RangeRegression> regressions) {
  ordered_json list = ordered_json::array();
  for (const auto& regression : regressions) {
    ordered_json entry;
    entry["y"] = std::string(indicator_name(regression.y));
    entry["x"] = std::string(indicator_name(regression.x));
    entry["log_base"] = 10;
    if (regression.fit) {
      entry["slope"] = regression.fit->slope;
      entry["intercept"] = regression.fit->intercept;
      entry["r_squared"] = regression.fit->r_squared;
    } else {
      entry["slope"] = nullptr;
      entry["intercept"] = nullptr;
      entry["r_squared"] = nullptr;
    }
    entry["n_used"] = regression.n_used;
    entry["n_excluded"] = regression.n_excluded;
    entry["notice"] = regression.notice;
    list.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["regressions"] = std::move(list);
  out << doc.dump(2) << '\n';
}

void write_curve(std::ostream& out, std::span<const CurvePoint> points) {
  out << "x,y\n";
  for (const auto& point : points) {
    out << format_exact(point.x) << ',' << format_exact(point.y) << '\n';
  }
}

void write_histogram(std::ostream& out, std::span<const HistogramBin> bins) {
  out << "bin_lo,bin_hi,count\n";
  for (const auto& bin : bins) {
    out << format_exact(bin.lo) << ',' << format_exact(bin.hi) << ','
        << bin.count << '\n';
  }
}

void write_mega_authors(std::ostream& out,
                        std::span<const MegaAuthor> authors) {
  out << "author_id,p,c,scaled_total,scaled_iota_e\n";
  for (const auto& author : authors) {
    out << author.author_id << ',' << author.p << ',' << author.c << ','
        << format_exact(author.scaled_total) << ','
        << format_exact(author.scaled_iota_e) << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + temp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + temp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw std::runtime_error("cannot move output into place at '" +
                             path.string() + "': " + ec.message());
  }
}

}  // namespace citemetrics
