#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "indalign/errors.hpp"

namespace indalign::csv {

std::vector<Record> parse(const std::string& text) {
    std::vector<Record> records;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    long line = 1;
    long record_line = 1;
    bool record_has_content = false;

    auto end_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back({std::move(fields), record_line});
        fields.clear();
        record_has_content = false;
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
                if (!field.empty() || field_was_quoted) {
                    throw ParseError("unexpected quote inside unquoted field", line);
                }
                in_quotes = true;
                field_was_quoted = true;
                record_has_content = true;
                break;
            case ',':
                end_field();
                record_has_content = true;
                break;
            case '\r':
                break;  // tolerate CRLF
            case '\n':
                if (record_has_content || !field.empty() || !fields.empty()) end_record();
                ++line;
                record_line = line;
                break;
            default:
                field.push_back(c);
                record_has_content = true;
                break;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted field", record_line);
    if (record_has_content || !field.empty() || !fields.empty()) end_record();
    return records;
}

std::vector<Record> read_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace indalign::csv
