#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "govgap/harness/table.hpp"
#include "govgap/oracle.hpp"

namespace govgap::harness {

enum class TableId { T3, T4, T5, T6 };

/// "T3".."T6" (case-insensitive); throws UsageError otherwise.
TableId parse_table_id(std::string_view s);
std::string_view to_string(TableId id) noexcept;

/// Printed values carry two decimals.
inline constexpr double kTableTolerance = 0.005 + 1e-9;

/// Capability levels of the θ-trace table.
const std::vector<double>& trace_thetas();

/// T3 upgrade decisions, T4 private optimum at θ=μ=2, T5 α* over θ (long
/// format, one row per industry×θ), T6 social optimum. Flags such as the
/// paradox/corner markers are boolean columns.
Table reproduce_table(TableId id, oracle::Execution exec = oracle::Execution::Parallel);

/// One cell of a published table next to the reproduced value.
struct GoldenCheck {
    std::string table;
    std::string row;
    std::string column;
    std::string expected;
    std::string computed;
    double error = 0.0;  // |computed − expected| for numeric cells, 0 otherwise
    bool numeric = false;
    bool ok = false;
};

/// Compares a reproduced table cell-for-cell with the published values.
std::vector<GoldenCheck> compare_with_reference(TableId id, const Table& reproduced);

}  // namespace govgap::harness
