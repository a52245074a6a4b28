#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "govgap/harness/table.hpp"

namespace govgap::harness {

enum class Format { Csv, Json, Svg };

Format parse_format(std::string_view s);

/// Header row, then one line per row. Numbers use the shortest
/// representation that round-trips, '.' decimal separator, no locale.
std::string to_csv(const Table& t);

/// {"meta": {command, params, version, columns}, "rows": [{column: value}]}.
nlohmann::ordered_json to_json(const Table& t);
Table table_from_json(const nlohmann::ordered_json& j);

struct ChartSpec {
    std::string title;
    std::string x_column;
    std::vector<std::string> y_columns;  // one polyline each
};

/// Line chart with one polyline per series and labelled axes.
std::string to_svg(const Table& t, const ChartSpec& chart);

/// Writes `contents` to `path`; throws std::runtime_error naming the path.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Renders in the chosen format. Svg needs a chart spec.
std::string render(const Table& t, Format f, const ChartSpec* chart = nullptr);

}  // namespace govgap::harness
