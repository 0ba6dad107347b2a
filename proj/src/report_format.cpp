#include "primedens/report_format.hpp"

#include "primedens/errors.hpp"
#include "primedens/mertens.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <string>

namespace primedens {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "text") {
        return OutputFormat::text;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "'");
}

void write_comparison_csv(std::span<const DensityComparison> rows, std::ostream& out) {
    out << "x,empirical,predicted,ratio,constant,truncation\n";
    for (const auto& row : rows) {
        fmt::print(out, "{},{},{},{},{},{}\n", row.x, row.empirical_count, row.predicted_count,
                   row.ratio ? fmt::format("{}", *row.ratio) : std::string("nan"),
                   row.constant_used, row.truncation_limit);
    }
}

nlohmann::ordered_json comparison_rows_json(std::span<const DensityComparison> rows) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json item;
        item["x"] = row.x;
        item["empirical"] = row.empirical_count;
        item["predicted"] = row.predicted_count;
        item["ratio"] = row.ratio ? nlohmann::ordered_json(*row.ratio) : nlohmann::ordered_json();
        item["constant"] = row.constant_used;
        item["truncation"] = row.truncation_limit;
        array.push_back(std::move(item));
    }
    return array;
}

void write_comparison_text(std::span<const DensityComparison> rows, std::ostream& out) {
    fmt::print(out, "{:>14} {:>12} {:>16} {:>10}\n", "x", "empirical", "predicted", "ratio");
    for (const auto& row : rows) {
        fmt::print(out, "{:>14} {:>12} {:>16.3f} {:>10}\n", row.x, row.empirical_count,
                   row.predicted_count,
                   row.ratio ? fmt::format("{:.6f}", *row.ratio) : std::string("undefined"));
    }
}

void write_trend_csv(const DependencyTrend& trend, std::ostream& out) {
    out << "x,ratio,abs_error\n";
    for (const auto& row : trend.rows) {
        fmt::print(out, "{},{},{}\n", row.x, row.ratio, row.abs_error);
    }
}

nlohmann::ordered_json trend_rows_json(const DependencyTrend& trend) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : trend.rows) {
        nlohmann::ordered_json item;
        item["x"] = row.x;
        item["ratio"] = row.ratio;
        item["abs_error"] = row.abs_error;
        array.push_back(std::move(item));
    }
    return array;
}

void write_trend_text(const DependencyTrend& trend, std::ostream& out) {
    fmt::print(out, "dependency ratio against exp(gamma)/2 = {:.10f}\n",
               constants::half_e_gamma());
    fmt::print(out, "{:>16} {:>14} {:>14}\n", "x", "ratio", "|error|");
    for (const auto& row : trend.rows) {
        fmt::print(out, "{:>16} {:>14.10f} {:>14.3e}\n", row.x, row.ratio, row.abs_error);
    }
    fmt::print(out, "errors nonincreasing: {}\n", trend.errors_nonincreasing ? "yes" : "no");
}

} // namespace primedens
