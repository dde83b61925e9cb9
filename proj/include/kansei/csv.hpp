#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kansei::csv {

// One parsed record plus the 1-based line it started on.
struct Row {
    std::vector<std::string> fields;
    int line = 0;
};

// Splits comma-separated text with double-quote escaping ("" inside a
// quoted field). Accepts LF and CRLF. Blank lines are skipped.
std::vector<Row> parse(std::string_view text);

// Quotes a field only when it contains a comma, quote or newline.
std::string escape_field(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

} // namespace kansei::csv
