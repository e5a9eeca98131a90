#include "indalign/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace indalign {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    // Integral values print without a decimal point so CSVs stay tidy.
    double rounded = std::nearbyint(v);
    if (rounded == v && std::abs(v) < 1e15) {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), static_cast<long long>(rounded));
        return std::string(buf, ptr);
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace indalign
