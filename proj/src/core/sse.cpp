#include "llmgrid/core/sse.hpp"

#include <nlohmann/json.hpp>

namespace llmgrid {

std::vector<std::string> SseParser::feed(std::string_view bytes) {
    buf_.append(bytes);
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto end = buf_.find("\n\n", pos);
        if (end == std::string::npos) break;
        std::string_view event(buf_.data() + pos, end - pos);
        // An event may span multiple lines; we only emit "data:" payloads.
        std::size_t line_start = 0;
        while (line_start <= event.size()) {
            auto line_end = event.find('\n', line_start);
            std::string_view line = line_end == std::string_view::npos
                                        ? event.substr(line_start)
                                        : event.substr(line_start, line_end - line_start);
            constexpr std::string_view prefix = "data:";
            if (line.substr(0, prefix.size()) == prefix) {
                std::string_view payload = line.substr(prefix.size());
                if (!payload.empty() && payload.front() == ' ') payload.remove_prefix(1);
                out.emplace_back(payload);
            }
            if (line_end == std::string_view::npos) break;
            line_start = line_end + 1;
        }
        pos = end + 2;
    }
    buf_.erase(0, pos);
    return out;
}

std::string sse_frame(std::string_view payload) {
    std::string out = "data: ";
    out += payload;
    out += "\n\n";
    return out;
}

std::optional<std::string> chunk_content(const std::string& payload) {
    if (payload == "[DONE]") return std::nullopt;
    auto j = nlohmann::json::parse(payload, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || !j["choices"].is_array() ||
        j["choices"].empty())
        return std::nullopt;
    const auto& choice = j["choices"][0];
    if (choice.contains("delta") && choice["delta"].is_object()) {
        const auto& delta = choice["delta"];
        if (delta.contains("content") && delta["content"].is_string()) {
            auto s = delta["content"].get<std::string>();
            if (!s.empty()) return s;
        }
        return std::nullopt;
    }
    if (choice.contains("text") && choice["text"].is_string()) {
        auto s = choice["text"].get<std::string>();
        if (!s.empty()) return s;
    }
    return std::nullopt;
}

ChunkKind classify_chunk(const std::string& payload) {
    if (payload == "[DONE]") return ChunkKind::done;
    if (chunk_content(payload)) return ChunkKind::content;
    auto j = nlohmann::json::parse(payload, nullptr, false);
    if (j.is_discarded()) return ChunkKind::other;
    if (j.contains("choices") && j["choices"].is_array() && !j["choices"].empty()) {
        const auto& choice = j["choices"][0];
        if (choice.contains("finish_reason") && !choice["finish_reason"].is_null())
            return ChunkKind::final;
        return ChunkKind::preamble;
    }
    if (j.contains("usage")) return ChunkKind::final;
    return ChunkKind::other;
}

}  // namespace llmgrid
