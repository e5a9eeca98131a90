#pragma once

#include <string>
#include <string_view>

namespace indalign {

// Lowercase hex SHA-256 digest. Used for prompt hashes, cache keys and stub lookups.
std::string sha256_hex(std::string_view data);

// Shortest decimal form that round-trips to the same double ("0.7", not "0.69999...").
std::string format_double(double v);

}  // namespace indalign
