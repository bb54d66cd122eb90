#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "corepart/cache.hpp"
#include "corepart/enumerate.hpp"
#include "corepart/formulas.hpp"
#include "corepart/serialize.hpp"

namespace corepart {

enum class CellSource { Enumeration, Formula };

enum class TableFormat { Markdown, Csv, Latex, Json };

inline std::string table_format_name(TableFormat f) {
    switch (f) {
        case TableFormat::Markdown: return "markdown";
        case TableFormat::Csv: return "csv";
        case TableFormat::Latex: return "latex";
        case TableFormat::Json: return "json";
    }
    throw std::logic_error("table_format_name: bad enum value");
}

inline TableFormat table_format_from_name(const std::string& name) {
    if (name == "markdown") return TableFormat::Markdown;
    if (name == "csv") return TableFormat::Csv;
    if (name == "latex") return TableFormat::Latex;
    if (name == "json") return TableFormat::Json;
    throw std::invalid_argument("unknown table format '" + name + "'");
}

/// A grid of counts: one row per d, one column per pair (s, s+r).
struct TableSpec {
    int r = 2;
    int d_min = 2;
    int d_max = 7;
    int s_min = 1;
    int s_max = 8;
    CellSource source = CellSource::Enumeration;
    Engine engine = Engine::Both;
    TableFormat format = TableFormat::Markdown;
};

struct TableData {
    TableSpec spec;
    std::string corner;                            // header cell, e.g. "d\\(s,s+2)"
    std::vector<std::string> columns;              // "(1,3)", "(2,4)", ...
    std::vector<int> d_values;
    std::vector<std::vector<std::int64_t>> cells;  // cells[row][col]
    bool conjectural = false;                      // formula-sourced with r >= 2
};

inline TableData compute_table(const TableSpec& spec, const CacheConfig* cache = nullptr) {
    if (spec.r < 1) throw std::invalid_argument("compute_table: r must be >= 1");
    if (spec.d_min < 1 || spec.d_min > spec.d_max) throw std::invalid_argument("compute_table: bad d range");
    if (spec.s_min < 1 || spec.s_min > spec.s_max) throw std::invalid_argument("compute_table: bad s range");
    TableData t;
    t.spec = spec;
    t.corner = "d\\(s,s+" + std::to_string(spec.r) + ")";
    t.conjectural = spec.source == CellSource::Formula && spec.r >= 2;
    for (int s = spec.s_min; s <= spec.s_max; ++s)
        t.columns.push_back("(" + std::to_string(s) + "," + std::to_string(s + spec.r) + ")");
    for (int d = spec.d_min; d <= spec.d_max; ++d) {
        t.d_values.push_back(d);
        std::vector<std::int64_t> row;
        for (int s = spec.s_min; s <= spec.s_max; ++s) {
            if (spec.source == CellSource::Formula) {
                row.push_back(spec.r == 1 ? count_ss1(d, s) : conjectured_count(d, spec.r, s));
            } else {
                EnumerationQuery q{CoreSpec{s, s + spec.r}, d, std::nullopt, spec.engine};
                row.push_back(cache ? run_query_cached(q, *cache).count : run_query(q).count);
            }
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string render_markdown(const TableData& t) {
    std::ostringstream out;
    out << "| " << t.corner << (t.conjectural ? " (conjectural)" : "");
    for (const auto& c : t.columns) out << " | " << c;
    out << " |\n|";
    for (std::size_t i = 0; i <= t.columns.size(); ++i) out << " --- |";
    out << "\n";
    for (std::size_t r = 0; r < t.d_values.size(); ++r) {
        out << "| " << t.d_values[r];
        for (std::int64_t v : t.cells[r]) out << " | " << v;
        out << " |\n";
    }
    return out.str();
}

inline std::string render_csv(const TableData& t) {
    std::ostringstream out;
    out << csv_quote(t.corner + (t.conjectural ? " (conjectural)" : ""));
    for (const auto& c : t.columns) out << ',' << csv_quote(c);
    out << '\n';
    for (std::size_t r = 0; r < t.d_values.size(); ++r) {
        out << t.d_values[r];
        for (std::int64_t v : t.cells[r]) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

inline std::string render_latex(const TableData& t) {
    std::ostringstream out;
    out << "\\begin{tabular}{*{" << (t.columns.size() + 1) << "}{|c}|}\n\\hline\n";
    out << "\\backslashbox{$d$}{$(s,s+" << t.spec.r << ")$}" << (t.conjectural ? " (conjectural)" : "");
    for (const auto& c : t.columns) out << " & " << c;
    out << " \\\\\n\\hline\n";
    for (std::size_t r = 0; r < t.d_values.size(); ++r) {
        out << t.d_values[r];
        for (std::int64_t v : t.cells[r]) out << " & " << v;
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

inline std::string render_json(const TableData& t) {
    Json j;
    j["r"] = t.spec.r;
    j["d_min"] = t.spec.d_min;
    j["d_max"] = t.spec.d_max;
    j["s_min"] = t.spec.s_min;
    j["s_max"] = t.spec.s_max;
    j["source"] = t.spec.source == CellSource::Formula ? "formula" : "enumeration";
    j["conjectural"] = t.conjectural;
    j["columns"] = t.columns;
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.d_values.size(); ++r)
        rows.push_back(Json{{"d", t.d_values[r]}, {"values", t.cells[r]}});
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

} // namespace detail

inline std::string render_table(const TableData& t) {
    switch (t.spec.format) {
        case TableFormat::Markdown: return detail::render_markdown(t);
        case TableFormat::Csv: return detail::render_csv(t);
        case TableFormat::Latex: return detail::render_latex(t);
        case TableFormat::Json: return detail::render_json(t);
    }
    throw std::logic_error("render_table: bad format enum");
}

inline std::string build_table(const TableSpec& spec, const CacheConfig* cache = nullptr) {
    return render_table(compute_table(spec, cache));
}

} // namespace corepart
