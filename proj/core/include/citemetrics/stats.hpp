#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/error.hpp"
#include "citemetrics/indicators.hpp"

namespace citemetrics {

/// Sample Pearson product-moment correlation. Throws std::invalid_argument
/// on length mismatch or fewer than two points, UndefinedCorrelation when
/// either vector is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Ranks 1..n with ties assigned the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of the average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

struct IndicatorColumn {
  std::string name;
  std::vector<double> values;
};

/// Authors x indicators table feeding the correlation analyses.
class IndicatorMatrix {
 public:
  IndicatorMatrix() = default;
  IndicatorMatrix(std::vector<std::string> authors,
                  std::vector<IndicatorColumn> columns);

  /// Columns in report order. ncs/mncs are included only if every vector
  /// carries them.
  static IndicatorMatrix from_vectors(std::span<const IndicatorVector> vectors);

  const std::vector<std::string>& authors() const noexcept { return authors_; }
  const std::vector<IndicatorColumn>& columns() const noexcept {
    return columns_;
  }
  std::size_t rows() const noexcept { return authors_.size(); }

  const IndicatorColumn* find(std::string_view name) const noexcept;
  const IndicatorColumn& column(std::string_view name) const;

  IndicatorMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const IndicatorMatrix&,
                         const IndicatorMatrix&) = default;

 private:
  std::vector<std::string> authors_;
  std::vector<IndicatorColumn> columns_;
};

enum class CorrelationMethod { Pearson, Spearman };

std::string_view method_name(CorrelationMethod method) noexcept;
std::optional<CorrelationMethod> parse_method(std::string_view name) noexcept;

struct TopNSubset {
  std::string by;
  std::size_t n = 0;
};

/// Symmetric coefficient matrix. A missing cell means the coefficient is
/// undefined (constant column); the whole row and column of such a column
/// are missing, diagonal included.
struct CorrelationReport {
  CorrelationMethod method = CorrelationMethod::Pearson;
  std::optional<TopNSubset> subset;  // nullopt = all observations
  std::size_t observations = 0;
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<double>>> matrix;

  std::optional<double> at(std::string_view row, std::string_view col) const;
};

CorrelationReport correlation_matrix(const IndicatorMatrix& m,
                                     CorrelationMethod method);

/// Rows holding the n largest values of column `by`, in ranking order.
/// Equal values are ordered by ascending author_id. If n exceeds the row
/// count all rows are returned and a warning is appended.
IndicatorMatrix top_n_subset(const IndicatorMatrix& m, std::string_view by,
                             std::size_t n, Warnings* warnings = nullptr);

struct SweepCell {
  std::size_t size = 0;  // requested size
  std::size_t used = 0;  // rows actually available
  std::string indicator;
  std::optional<double> rho;
};

/// Spearman between `by` and each `against` column over the top-s subset
/// for every s in `sizes` (ascending, each >= 2).
std::vector<SweepCell> sample_size_sweep(const IndicatorMatrix& m,
                                         std::string_view by,
                                         std::span<const std::size_t> sizes,
                                         std::span<const std::string> against,
                                         Warnings* warnings = nullptr);

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n = 0;
};

/// Simple least squares y = intercept + slope * x. Requires >= 2 points and
/// non-constant x. R^2 is 1 when y is constant.
OlsFit ols(std::span<const double> x, std::span<const double> y);

}  // namespace citemetrics
