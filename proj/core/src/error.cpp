#include "citemetrics/error.hpp"

#include <utility>

namespace citemetrics {

MissingBaseline::MissingBaseline(std::string field_id, int pub_year)
    : std::out_of_range("no baseline for field '" + field_id + "', year " +
                        std::to_string(pub_year)),
      field_id_(std::move(field_id)),
      pub_year_(pub_year) {}

MissingBaseline::MissingBaseline(const std::string& paper_id,
                                 const char* what_is_missing)
    : std::out_of_range("paper '" + paper_id + "' has no " + what_is_missing +
                        "; cannot normalize") {}

ConfigError::ConfigError(std::string parameter, const std::string& reason)
    : std::invalid_argument("invalid " + parameter + ": " + reason),
      parameter_(std::move(parameter)) {}

ParseError::ParseError(std::string source, std::size_t row, std::string column,
                       const std::string& reason)
    : std::runtime_error(source + ":" + std::to_string(row) +
                         (column.empty() ? "" : ": column '" + column + "'") +
                         ": " + reason),
      source_(std::move(source)),
      row_(row),
      column_(std::move(column)) {}

}  // namespace citemetrics
