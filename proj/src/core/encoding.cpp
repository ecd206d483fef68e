#include "llmgrid/core/encoding.hpp"

#include <random>

namespace llmgrid {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xf]);
    }
    return out;
}

Result<std::vector<std::uint8_t>> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) return make_error(Errc::invalid_argument, "odd hex length");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_val(hex[2 * i]);
        int lo = hex_val(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) return make_error(Errc::invalid_argument, "bad hex digit");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

std::string percent_encode_field(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ',' || c == ';' || c == '%') {
            out.push_back('%');
            out.push_back(kHexDigits[static_cast<unsigned char>(c) >> 4]);
            out.push_back(kHexDigits[static_cast<unsigned char>(c) & 0xf]);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Result<std::string> percent_decode_field(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '%') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 2 >= s.size()) return make_error(Errc::invalid_argument, "truncated escape");
        int hi = hex_val(s[i + 1]);
        int lo = hex_val(s[i + 2]);
        if (hi < 0 || lo < 0) return make_error(Errc::invalid_argument, "bad escape");
        out.push_back(static_cast<char>(hi << 4 | lo));
        i += 2;
    }
    return out;
}

std::string random_token(std::string_view prefix) {
    std::random_device rd;
    std::uint8_t bytes[16];
    for (std::size_t i = 0; i < sizeof(bytes); i += 4) {
        std::uint32_t v = rd();
        bytes[i] = static_cast<std::uint8_t>(v);
        bytes[i + 1] = static_cast<std::uint8_t>(v >> 8);
        bytes[i + 2] = static_cast<std::uint8_t>(v >> 16);
        bytes[i + 3] = static_cast<std::uint8_t>(v >> 24);
    }
    return std::string(prefix) + to_hex(bytes);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace llmgrid
