#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mis {

struct BenchRow {
    std::string name;
    long n = 0;
    long m = 0;
    std::string strategy;
    long kernel_n = 0;
    long kernel_m = 0;
    long components = 0;
    long k_max = 0;
    long offset = 0;
    std::optional<long> alpha; // empty when the run did not finish
    double time_kernelize_s = 0.0;
    std::optional<double> time_solve_s; // empty when the run did not finish
    std::string status;

    bool operator==(const BenchRow&) const = default;
};

enum class TableFormat { csv, tsv, pretty };

// Header plus one line per row, input order. Unfinished runs render alpha
// and time_solve_s as "-"; times are printed with two decimals.
std::string emit_table(const std::vector<BenchRow>& rows, TableFormat format);

// Inverse of emit_table for csv/tsv (times come back rounded to the two
// printed decimals).
std::vector<BenchRow> parse_table(const std::string& text, TableFormat format);

} // namespace mis
