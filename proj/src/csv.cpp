// csv.cpp — CSV read/write ('.' decimal, comma separator, header row mandatory)
#include "nwt/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nwt/errors.hpp"

namespace nwt::csv {

std::size_t Table::column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    require(it != columns.end(), Errc::io_error, "csv: missing column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

bool Table::has_column(const std::string& name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> Table::column(const std::string& name) const {
    const std::size_t j = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[j]);
    return out;
}

std::string format_double(double value) {
    if (std::isnan(value)) return {};
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

void write(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path);
    require(out.good(), Errc::io_error, "csv: cannot open for writing: " + path.string());
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        if (j) out << ',';
        out << table.columns[j];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << format_double(row[j]);
        }
        out << '\n';
    }
    require(out.good(), Errc::io_error, "csv: write failed: " + path.string());
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Table read(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "csv: cannot open: " + path.string());

    Table table;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        if (table.columns.empty()) {
            for (auto& cell : split_line(trimmed)) {
                const std::string name = strip(cell);
                require(!name.empty(), Errc::io_error,
                        "csv: empty column name at line " + std::to_string(lineno));
                table.columns.push_back(name);
            }
            continue;
        }
        auto cells = split_line(trimmed);
        if (cells.size() != table.columns.size()) {
            fail(Errc::io_error, "csv: line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(table.columns.size()) + " cells, got " +
                                     std::to_string(cells.size()));
        }
        std::vector<double> row(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const std::string cell = strip(cells[j]);
            if (cell.empty()) {
                row[j] = std::nan("");
                continue;
            }
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                fail(Errc::io_error, "csv: line " + std::to_string(lineno) +
                                         ": cannot parse number '" + cell + "'");
            }
            row[j] = v;
        }
        table.rows.push_back(std::move(row));
    }
    require(!table.columns.empty(), Errc::io_error, "csv: no header row in " + path.string());
    return table;
}

} // namespace nwt::csv
