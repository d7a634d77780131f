#include "schurpress/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace schurpress {

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string cell_to_csv(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return csv_quote(*s);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<bool>(cell) ? "true" : "false";
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return *d;
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
        return *i;
    }
    return std::get<bool>(cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
        throw std::invalid_argument("row width does not match table header");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string render_table(const Table& table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out;
        for (std::size_t i = 0; i < table.header.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += csv_quote(table.header[i]);
        }
        out += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i != 0) {
                    out += ',';
                }
                out += cell_to_csv(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.header[i]] = cell_to_json(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_table_atomic(const Table& table, OutputFormat format, const std::string& path) {
    const std::string content = render_table(table, format);
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("failed to move output into place: " + ec.message());
    }
}

Table report_table(const std::vector<ReportRow>& rows) {
    Table table;
    table.header = {"experiment", "params", "analytic", "sampled", "band", "pass"};
    for (const auto& row : rows) {
        table.add_row({row.experiment, row.params, row.analytic, row.sampled, row.band, row.pass});
    }
    return table;
}

void emit_report(const std::vector<ReportRow>& rows, OutputFormat format,
                 const std::string& path) {
    write_table_atomic(report_table(rows), format, path);
}

}  // namespace schurpress
