#pragma once

#include "primedens/density_report.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string_view>

namespace primedens {

enum class OutputFormat { csv, json, text };

/// "csv", "json" or "text"; throws ConfigError otherwise.
OutputFormat parse_output_format(std::string_view name);

// Header: x,empirical,predicted,ratio,constant,truncation. Flagged rows
// carry "nan" in the ratio column (null in JSON). Reals are written in
// shortest round-trip form so output is byte-stable.
void write_comparison_csv(std::span<const DensityComparison> rows, std::ostream& out);
nlohmann::ordered_json comparison_rows_json(std::span<const DensityComparison> rows);
void write_comparison_text(std::span<const DensityComparison> rows, std::ostream& out);

// Header: x,ratio,abs_error
void write_trend_csv(const DependencyTrend& trend, std::ostream& out);
nlohmann::ordered_json trend_rows_json(const DependencyTrend& trend);
void write_trend_text(const DependencyTrend& trend, std::ostream& out);

} // namespace primedens
