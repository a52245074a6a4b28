#include "govgap/harness/emit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "govgap/error.hpp"

namespace govgap::harness {

using nlohmann::ordered_json;

namespace {

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_cell(const Cell& c) {
    if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    return csv_escape(std::get<std::string>(c));
}

ordered_json cell_json(const Cell& c) {
    return std::visit([](const auto& v) { return ordered_json(v); }, c);
}

Cell json_cell(const ordered_json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw UsageError("unsupported JSON value in table: " + j.dump());
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "svg") return Format::Svg;
    throw UsageError("unknown format '" + std::string(s) + "' (expected csv, json or svg)");
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

ordered_json to_json(const Table& t) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : t.params) params[k] = cell_json(v);
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json r = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns.at(i)] = cell_json(row[i]);
        rows.push_back(std::move(r));
    }
    return ordered_json{{"meta",
                         {{"command", t.command},
                          {"version", kVersion},
                          {"params", std::move(params)},
                          {"columns", t.columns}}},
                        {"rows", std::move(rows)}};
}

Table table_from_json(const ordered_json& j) {
    Table t;
    const auto& meta = j.at("meta");
    t.command = meta.at("command").get<std::string>();
    for (const auto& [k, v] : meta.at("params").items()) t.params.emplace_back(k, json_cell(v));
    t.columns = meta.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : t.columns) row.push_back(json_cell(r.at(c)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string to_svg(const Table& t, const ChartSpec& chart) {
    constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 60;
    static constexpr std::array<const char*, 6> colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                          "#ff7f0e", "#9467bd", "#8c564b"};
    const std::size_t xc = t.column_index(chart.x_column);
    std::vector<std::size_t> ys;
    for (const auto& c : chart.y_columns) ys.push_back(t.column_index(c));

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& row : t.rows) {
        const double x = std::get<double>(row[xc]);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        for (std::size_t y : ys) {
            const double v = std::get<double>(row[y]);
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (t.rows.empty()) xmin = ymin = 0.0, xmax = ymax = 1.0;
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto sy = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << xml_escape(chart.title) << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15
       << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(chart.x_column) << "</text>\n";
    os << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
       << "transform=\"rotate(-90 18 " << (T + H - B) / 2 << ")\">value</text>\n";
    os << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"11\">" << format_number(xmin)
       << "</text>\n";
    os << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\" font-size=\"11\">"
       << format_number(xmax) << "</text>\n";
    os << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\" font-size=\"11\">"
       << format_number(ymin) << "</text>\n";
    os << "<text x=\"" << L - 4 << "\" y=\"" << T + 10 << "\" text-anchor=\"end\" font-size=\"11\">"
       << format_number(ymax) << "</text>\n";

    for (std::size_t s = 0; s < ys.size(); ++s) {
        const char* color = colors[s % colors.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" data-series=\""
           << xml_escape(chart.y_columns[s]) << "\" points=\"";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (r) os << ' ';
            os << sx(std::get<double>(t.rows[r][xc])) << ',' << sy(std::get<double>(t.rows[r][ys[s]]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * (s + 1) << "\" text-anchor=\"end\" "
           << "font-size=\"12\" fill=\"" << color << "\">" << xml_escape(chart.y_columns[s]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string render(const Table& t, Format f, const ChartSpec* chart) {
    switch (f) {
        case Format::Csv: return to_csv(t);
        case Format::Json: return to_json(t).dump(2) + "\n";
        case Format::Svg:
            if (!chart) throw UsageError("svg output is only available for sweeps");
            return to_svg(t, *chart);
    }
    throw UsageError("unknown format");
}

}  // namespace govgap::harness
