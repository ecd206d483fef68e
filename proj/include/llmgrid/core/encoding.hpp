#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "llmgrid/core/result.hpp"

namespace llmgrid {

std::string to_hex(std::span<const std::uint8_t> bytes);
Result<std::vector<std::uint8_t>> from_hex(std::string_view hex);

/// Percent-encodes the delimiter set of the submit-string protocol
/// (comma, semicolon, percent). Everything else passes through.
std::string percent_encode_field(std::string_view s);
Result<std::string> percent_decode_field(std::string_view s);

/// Random secret, "<prefix>" + 32 hex chars, from std::random_device.
std::string random_token(std::string_view prefix);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace llmgrid
