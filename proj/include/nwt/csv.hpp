// csv.hpp — comma-separated numeric tables with unit-suffixed column headers
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nwt::csv {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // each row has columns.size() entries

    std::size_t column_index(const std::string& name) const; // throws io_error if absent
    bool has_column(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;
};

// Shortest round-trip decimal representation (std::to_chars). NaN -> empty cell.
std::string format_double(double value);

void write(const std::filesystem::path& path, const Table& table);

// Parse errors carry 1-based line numbers. Empty cells read as NaN.
Table read(const std::filesystem::path& path);

} // namespace nwt::csv
