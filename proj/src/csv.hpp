#pragma once

// Internal RFC-4180-ish CSV support: quoted fields, embedded commas,
// quotes and newlines. Line numbers are tracked for error reporting.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace indalign::csv {

struct Record {
    std::vector<std::string> fields;
    long line = 0;  // 1-based line the record starts on
};

std::vector<Record> read_records(const std::filesystem::path& path);
std::vector<Record> parse(const std::string& text);

std::string escape(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace indalign::csv
