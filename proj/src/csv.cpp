#include "kansei/csv.hpp"

namespace kansei::csv {

std::vector<Row> parse(std::string_view text) {
    std::vector<Row> rows;
    Row current;
    current.line = 1;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;
    int line = 1;

    auto end_field = [&] {
        current.fields.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        if (row_has_content || !current.fields.empty()) {
            end_field();
            rows.push_back(std::move(current));
        }
        current = Row{};
        current.line = line;
        row_has_content = false;
        field.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            row_has_content = true;
            break;
        case ',':
            end_field();
            row_has_content = true;
            break;
        case '\r':
            break;
        case '\n':
            ++line;
            end_row();
            break;
        default:
            field.push_back(c);
            row_has_content = true;
            break;
        }
    }
    end_row();
    return rows;
}

std::string escape_field(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += escape_field(fields[i]);
    }
    return out;
}

} // namespace kansei::csv
