#pragma once

#include <string>
#include <variant>
#include <vector>

namespace schurpress {

enum class OutputFormat { csv, json };

using Cell = std::variant<std::string, double, long long, bool>;

/// Column-ordered table; the schema (header) is fixed per producer.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// One verification line: analytic value vs sampled value with its band.
struct ReportRow {
    std::string experiment;
    std::string params;
    double analytic;
    double sampled;
    double band;
    bool pass;
};

/// %.17g: up to 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

std::string render_table(const Table& table, OutputFormat format);

/// Writes via a temporary file plus rename, so failures leave no partial file.
void write_table_atomic(const Table& table, OutputFormat format, const std::string& path);

Table report_table(const std::vector<ReportRow>& rows);
void emit_report(const std::vector<ReportRow>& rows, OutputFormat format,
                 const std::string& path);

}  // namespace schurpress
