#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace geew::cli {

using Cell = std::variant<double, std::string>;

/// Column-labelled rows, the unit every command emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Recorded in JSON output only.
    std::string command;

    void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);
/// Guess from the extension, falling back to the first non-blank character.
Format detect_format(const std::string& path, const std::string& content);

/// Doubles at 17 significant digits; inf/nan spelled out. Fields containing
/// a comma, quote or line break are quoted with doubled inner quotes.
void write_csv(std::ostream& os, const Table& t);
/// {"schema_version": 1, "command", "columns", "rows"}; non-finite numbers
/// become the strings "inf", "-inf", "nan".
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, Format f);

/// Inverse of the writers. Throws std::runtime_error on malformed input.
Table read_csv(const std::string& text);
Table read_json(const std::string& text);
Table read_table(const std::string& text, Format f);

std::string format_double(double v);

}  // namespace geew::cli
