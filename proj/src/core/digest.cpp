#include "llmgrid/core/digest.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/params.h>

#include <cstring>
#include <stdexcept>

#include "llmgrid/core/encoding.hpp"

namespace llmgrid {

Digest32 keyed_digest(std::string_view secret, std::string_view message) {
    Digest32 out{};
    EVP_MAC* mac = EVP_MAC_fetch(nullptr, "HMAC", nullptr);
    if (!mac) throw std::runtime_error("EVP_MAC_fetch(HMAC) failed");
    EVP_MAC_CTX* ctx = EVP_MAC_CTX_new(mac);
    EVP_MAC_free(mac);
    if (!ctx) throw std::runtime_error("EVP_MAC_CTX_new failed");

    char digest_name[] = "SHA256";
    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_DIGEST, digest_name, 0),
        OSSL_PARAM_construct_end(),
    };
    std::size_t out_len = 0;
    bool ok = EVP_MAC_init(ctx, reinterpret_cast<const unsigned char*>(secret.data()),
                           secret.size(), params) &&
              EVP_MAC_update(ctx, reinterpret_cast<const unsigned char*>(message.data()),
                             message.size()) &&
              EVP_MAC_final(ctx, out.data(), &out_len, out.size());
    EVP_MAC_CTX_free(ctx);
    if (!ok || out_len != out.size()) throw std::runtime_error("HMAC-SHA256 failed");
    return out;
}

std::string digest_hex(const Digest32& d) {
    return to_hex(std::span<const std::uint8_t>(d.data(), d.size()));
}

bool digest_from_hex(std::string_view hex, Digest32& out) {
    auto bytes = from_hex(hex);
    if (!bytes.ok() || bytes.value().size() != out.size()) return false;
    std::memcpy(out.data(), bytes.value().data(), out.size());
    return true;
}

}  // namespace llmgrid
