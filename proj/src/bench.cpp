#include "mis/bench.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mis {

namespace {

const char* const kColumns[] = {"name", "n", "m", "strategy", "kernel_n", "kernel_m",
                                "components", "k_max", "offset", "alpha",
                                "time_kernelize_s", "time_solve_s", "status"};
constexpr int kNumColumns = 13;

std::string format_time(double seconds) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << seconds;
    return out.str();
}

std::vector<std::string> row_cells(const BenchRow& row) {
    return {row.name,
            std::to_string(row.n),
            std::to_string(row.m),
            row.strategy,
            std::to_string(row.kernel_n),
            std::to_string(row.kernel_m),
            std::to_string(row.components),
            std::to_string(row.k_max),
            std::to_string(row.offset),
            row.alpha ? std::to_string(*row.alpha) : "-",
            format_time(row.time_kernelize_s),
            row.time_solve_s ? format_time(*row.time_solve_s) : "-",
            row.status};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep))
        cells.push_back(cell);
    if (!line.empty() && line.back() == sep)
        cells.emplace_back();
    return cells;
}

long to_long(const std::string& s) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer cell '" + s + "'");
    return value;
}

} // namespace

std::string emit_table(const std::vector<BenchRow>& rows, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::pretty) {
        std::vector<size_t> width(kNumColumns);
        for (int c = 0; c < kNumColumns; ++c)
            width[c] = std::string(kColumns[c]).size();
        std::vector<std::vector<std::string>> all;
        for (const auto& row : rows) {
            all.push_back(row_cells(row));
            for (int c = 0; c < kNumColumns; ++c)
                width[c] = std::max(width[c], all.back()[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (int c = 0; c < kNumColumns; ++c)
                out << (c ? "  " : "") << std::setw(static_cast<int>(width[c]))
                    << (c == 0 || c == 3 || c == 12 ? std::left : std::right) << cells[c];
            out << '\n';
        };
        line({kColumns, kColumns + kNumColumns});
        for (const auto& cells : all)
            line(cells);
        return out.str();
    }

    char sep = format == TableFormat::csv ? ',' : '\t';
    for (int c = 0; c < kNumColumns; ++c)
        out << (c ? std::string(1, sep) : "") << kColumns[c];
    out << '\n';
    for (const auto& row : rows) {
        auto cells = row_cells(row);
        for (int c = 0; c < kNumColumns; ++c)
            out << (c ? std::string(1, sep) : "") << cells[c];
        out << '\n';
    }
    return out.str();
}

std::vector<BenchRow> parse_table(const std::string& text, TableFormat format) {
    if (format == TableFormat::pretty)
        throw std::invalid_argument("pretty tables are write-only");
    char sep = format == TableFormat::csv ? ',' : '\t';

    std::vector<BenchRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto cells = split(line, sep);
        if (static_cast<int>(cells.size()) != kNumColumns)
            throw std::invalid_argument("expected " + std::to_string(kNumColumns) + " cells");
        if (header) {
            header = false;
            continue;
        }
        BenchRow row;
        row.name = cells[0];
        row.n = to_long(cells[1]);
        row.m = to_long(cells[2]);
        row.strategy = cells[3];
        row.kernel_n = to_long(cells[4]);
        row.kernel_m = to_long(cells[5]);
        row.components = to_long(cells[6]);
        row.k_max = to_long(cells[7]);
        row.offset = to_long(cells[8]);
        if (cells[9] != "-")
            row.alpha = to_long(cells[9]);
        row.time_kernelize_s = std::stod(cells[10]);
        if (cells[11] != "-")
            row.time_solve_s = std::stod(cells[11]);
        row.status = cells[12];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace mis
