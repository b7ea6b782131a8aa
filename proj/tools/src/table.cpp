#include "geew/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace geew::cli {

namespace {

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\r\n") != std::string::npos; }

void write_field(std::ostream& os, const std::string& s) {
    if (!needs_quotes(s)) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

std::string cell_text(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

// Numbers and the non-finite spellings become doubles, anything else stays text.
Cell parse_cell(const std::string& s, bool quoted) {
    if (quoted || s.empty()) return s;
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() + s.size()) return v;
    return s;
}

std::vector<std::vector<std::pair<std::string, bool>>> split_csv(const std::string& text) {
    std::vector<std::vector<std::pair<std::string, bool>>> records;
    std::vector<std::pair<std::string, bool>> record;
    std::string field;
    bool quoted = false;
    bool in_quotes = false;
    bool any = false;
    auto end_field = [&] {
        record.emplace_back(field, quoted);
        field.clear();
        quoted = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty()) throw std::runtime_error("csv: quote inside an unquoted field");
            in_quotes = true;
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_field();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += c;
        }
    }
    if (in_quotes) throw std::runtime_error("csv: unterminated quoted field");
    if (any) {
        end_field();
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

Format detect_format(const std::string& path, const std::string& content) {
    auto ends_with = [&](const char* ext) {
        const std::string e(ext);
        return path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
    };
    if (ends_with(".json")) return Format::json;
    if (ends_with(".csv")) return Format::csv;
    const auto pos = content.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && content[pos] == '{' ? Format::json : Format::csv;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ',';
        write_field(os, t.columns[i]);
    }
    os << "\r\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            // text that would read back as a number keeps its quotes
            const bool text = std::holds_alternative<std::string>(row[i]);
            const std::string s = cell_text(row[i]);
            if (text && (needs_quotes(s) || std::holds_alternative<double>(parse_cell(s, false)))) {
                os << '"';
                for (char c : s) {
                    if (c == '"') os << '"';
                    os << c;
                }
                os << '"';
            } else {
                write_field(os, s);
            }
        }
        os << "\r\n";
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = t.command;
    j["columns"] = t.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::json::array();
        for (const auto& c : row) {
            if (const double* d = std::get_if<double>(&c))
                r.push_back(std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(format_double(*d)));
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& t, Format f) {
    if (f == Format::csv)
        write_csv(os, t);
    else
        write_json(os, t);
}

Table read_csv(const std::string& text) {
    auto records = split_csv(text);
    if (records.empty()) throw std::runtime_error("csv: missing header");
    Table t;
    for (auto& [name, quoted] : records.front()) t.columns.push_back(name);
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.columns.size())
            throw std::runtime_error("csv: record " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                                     " fields, header has " + std::to_string(t.columns.size()));
        std::vector<Cell> row;
        for (auto& [s, quoted] : records[r]) row.push_back(parse_cell(s, quoted));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table read_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("json: ") + e.what());
    }
    if (!j.is_object() || j.value("schema_version", 0) != 1)
        throw std::runtime_error("json: expected an object with schema_version 1");
    Table t;
    t.command = j.value("command", "");
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : r) {
            if (c.is_number()) {
                row.emplace_back(c.get<double>());
            } else if (c.is_string()) {
                const auto s = c.get<std::string>();
                if (s == "inf" || s == "-inf" || s == "nan")
                    row.push_back(parse_cell(s, false));
                else
                    row.emplace_back(s);
            } else {
                throw std::runtime_error("json: cells must be numbers or strings");
            }
        }
        if (row.size() != t.columns.size()) throw std::runtime_error("json: row width does not match columns");
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table read_table(const std::string& text, Format f) { return f == Format::csv ? read_csv(text) : read_json(text); }

}  // namespace geew::cli
