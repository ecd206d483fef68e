#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace llmgrid {

/// Fixed 32-byte keyed one-way digest (HMAC-SHA256). API keys and callback
/// tokens are stored only in this form; the plaintext never hits the store.
using Digest32 = std::array<std::uint8_t, 32>;

Digest32 keyed_digest(std::string_view secret, std::string_view message);

std::string digest_hex(const Digest32& d);
bool digest_from_hex(std::string_view hex, Digest32& out);

}  // namespace llmgrid
