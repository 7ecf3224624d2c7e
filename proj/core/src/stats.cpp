#include "citemetrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace citemetrics {

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation inputs differ in length (" +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("correlation needs at least two points");
  }
}

bool is_constant(std::span<const double> v) noexcept {
  return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; });
}

double mean(std::span<const double> v) noexcept {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (is_constant(x) || is_constant(y)) {
    throw UndefinedCorrelation("correlation undefined for a constant vector");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (double v : values) {
    if (std::isnan(v)) throw std::invalid_argument("cannot rank NaN");
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j; their mean is (i + 1 + j) / 2.
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

IndicatorMatrix::IndicatorMatrix(std::vector<std::string> authors,
                                 std::vector<IndicatorColumn> columns)
    : authors_(std::move(authors)), columns_(std::move(columns)) {
  for (const auto& column : columns_) {
    if (column.values.size() != authors_.size()) {
      throw ValidationError("column '" + column.name + "' has " +
                            std::to_string(column.values.size()) +
                            " values for " + std::to_string(authors_.size()) +
                            " authors");
    }
  }
}

IndicatorMatrix IndicatorMatrix::from_vectors(
    std::span<const IndicatorVector> vectors) {
  std::vector<std::string> authors;
  authors.reserve(vectors.size());
  for (const auto& v : vectors) authors.push_back(v.author_id);

  std::vector<IndicatorColumn> columns;
  for (Indicator indicator : kReportOrder) {
    IndicatorColumn column{std::string(indicator_name(indicator)), {}};
    column.values.reserve(vectors.size());
    bool complete = !vectors.empty() || (indicator != Indicator::NCS &&
                                         indicator != Indicator::MNCS);
    for (const auto& v : vectors) {
      const auto value = indicator_value(v, indicator);
      if (!value) {
        complete = false;
        break;
      }
      column.values.push_back(*value);
    }
    if (complete) columns.push_back(std::move(column));
  }
  return IndicatorMatrix(std::move(authors), std::move(columns));
}

const IndicatorColumn* IndicatorMatrix::find(
    std::string_view name) const noexcept {
  for (const auto& column : columns_) {
    if (column.name == name) return &column;
  }
  return nullptr;
}

const IndicatorColumn& IndicatorMatrix::column(std::string_view name) const {
  if (const auto* found = find(name)) return *found;
  throw std::invalid_argument("no indicator column named '" +
                              std::string(name) + "'");
}

IndicatorMatrix IndicatorMatrix::select_rows(
    std::span<const std::size_t> rows) const {
  std::vector<std::string> authors;
  authors.reserve(rows.size());
  for (std::size_t r : rows) authors.push_back(authors_.at(r));
  std::vector<IndicatorColumn> columns;
  columns.reserve(columns_.size());
  for (const auto& column : columns_) {
    IndicatorColumn picked{column.name, {}};
    picked.values.reserve(rows.size());
    for (std::size_t r : rows) picked.values.push_back(column.values[r]);
    columns.push_back(std::move(picked));
  }
  return IndicatorMatrix(std::move(authors), std::move(columns));
}

std::string_view method_name(CorrelationMethod method) noexcept {
  return method == CorrelationMethod::Pearson ? "pearson" : "spearman";
}

std::optional<CorrelationMethod> parse_method(std::string_view name) noexcept {
  if (name == "pearson") return CorrelationMethod::Pearson;
  if (name == "spearman") return CorrelationMethod::Spearman;
  return std::nullopt;
}

std::optional<double> CorrelationReport::at(std::string_view row,
                                            std::string_view col) const {
  const auto index = [&](std::string_view name) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw std::invalid_argument("no indicator '" + std::string(name) +
                                  "' in report");
    }
    return static_cast<std::size_t>(it - names.begin());
  };
  return matrix[index(row)][index(col)];
}

CorrelationReport correlation_matrix(const IndicatorMatrix& m,
                                     CorrelationMethod method) {
  if (m.rows() < 2) {
    throw std::invalid_argument("correlation matrix needs at least two authors");
  }
  const auto& columns = m.columns();
  const std::size_t k = columns.size();

  std::vector<std::vector<double>> prepared;
  std::vector<bool> defined;
  prepared.reserve(k);
  for (const auto& column : columns) {
    defined.push_back(!is_constant(column.values));
    prepared.push_back(method == CorrelationMethod::Spearman
                           ? average_ranks(column.values)
                           : column.values);
  }

  CorrelationReport report;
  report.method = method;
  report.observations = m.rows();
  for (const auto& column : columns) report.names.push_back(column.name);
  report.matrix.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (!defined[i]) continue;
    report.matrix[i][i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!defined[j]) continue;
      const double r = pearson(prepared[i], prepared[j]);
      report.matrix[i][j] = r;
      report.matrix[j][i] = r;
    }
  }
  return report;
}

IndicatorMatrix top_n_subset(const IndicatorMatrix& m, std::string_view by,
                             std::size_t n, Warnings* warnings) {
  if (n == 0) throw std::invalid_argument("top-n subset size must be >= 1");
  const auto& values = m.column(by).values;
  const auto& authors = m.authors();

  if (n > m.rows() && warnings != nullptr) {
    warnings->push_back("requested top " + std::to_string(n) + " by " +
                        std::string(by) + " but only " +
                        std::to_string(m.rows()) + " authors available");
  }
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return authors[a] < authors[b];
  });
  order.resize(std::min(n, order.size()));
  return m.select_rows(order);
}

std::vector<SweepCell> sample_size_sweep(const IndicatorMatrix& m,
                                         std::string_view by,
                                         std::span<const std::size_t> sizes,
                                         std::span<const std::string> against,
                                         Warnings* warnings) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2) {
      throw std::invalid_argument("sweep sizes must be >= 2");
    }
    if (i > 0 && sizes[i] < sizes[i - 1]) {
      throw std::invalid_argument("sweep sizes must be ascending");
    }
  }
  m.column(by);
  for (const auto& name : against) m.column(name);

  std::vector<SweepCell> cells;
  for (std::size_t size : sizes) {
    const auto subset = top_n_subset(m, by, size, warnings);
    const auto& base = subset.column(by).values;
    for (const auto& name : against) {
      SweepCell cell{size, subset.rows(), name, std::nullopt};
      try {
        cell.rho = spearman(base, subset.column(name).values);
      } catch (const UndefinedCorrelation&) {
        // reported as a missing cell
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

OlsFit ols(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (is_constant(x)) {
    throw UndefinedCorrelation("regression undefined: x has no variance");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  OlsFit fit;
  fit.n = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double residual = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += residual * residual;
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace citemetrics
