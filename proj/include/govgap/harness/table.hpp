#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace govgap::harness {

using Cell = std::variant<std::string, double, bool>;

inline constexpr const char* kVersion = "1.0.0";

/// Column-labelled rows plus the parameters that produced them. Every
/// command's output goes through this type before being written.
struct Table {
    std::string command;
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::size_t column_index(const std::string& name) const;
    double number(std::size_t row, const std::string& column) const;
    bool flag(std::size_t row, const std::string& column) const;
    const std::string& text(std::size_t row, const std::string& column) const;

    friend bool operator==(const Table&, const Table&) = default;
};

}  // namespace govgap::harness
