#include "govgap/harness/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace govgap::harness {

std::size_t Table::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

double Table::number(std::size_t row, const std::string& column) const {
    return std::get<double>(rows.at(row).at(column_index(column)));
}

bool Table::flag(std::size_t row, const std::string& column) const {
    return std::get<bool>(rows.at(row).at(column_index(column)));
}

const std::string& Table::text(std::size_t row, const std::string& column) const {
    return std::get<std::string>(rows.at(row).at(column_index(column)));
}

}  // namespace govgap::harness
