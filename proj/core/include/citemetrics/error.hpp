#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace citemetrics {

/// Non-fatal diagnostics collected by operations that degrade gracefully.
using Warnings = std::vector<std::string>;

/// A value violates a domain invariant (negative count, duplicate id, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Correlation is undefined because an input vector has zero variance.
class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A paper has no matching (field, year) cell in the baseline table.
class MissingBaseline : public std::out_of_range {
 public:
  MissingBaseline(std::string field_id, int pub_year);
  MissingBaseline(const std::string& paper_id, const char* what_is_missing);

  const std::string& field_id() const noexcept { return field_id_; }
  int pub_year() const noexcept { return pub_year_; }

 private:
  std::string field_id_;
  int pub_year_ = 0;
};

/// Generator or command configuration is out of its valid range.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string parameter, const std::string& reason);
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// Malformed input file. `row` is the 1-based line number (header = 1).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t row, std::string column,
             const std::string& reason);

  const std::string& source() const noexcept { return source_; }
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t row_;
  std::string column_;
};

}  // namespace citemetrics
