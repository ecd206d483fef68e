#pragma once

#include <optional>
#include <string>
#include <vector>

namespace llmgrid {

/// Incremental Server-Sent-Events decoder for the "data: <payload>\n\n"
/// framing used by the OpenAI streaming API.
class SseParser {
public:
    /// Feed raw bytes; returns the data payloads completed by this chunk.
    std::vector<std::string> feed(std::string_view bytes);

private:
    std::string buf_;
};

std::string sse_frame(std::string_view payload);

enum class ChunkKind {
    done,      // "[DONE]" sentinel
    content,   // delta carries a non-empty content/text token
    preamble,  // role-only or otherwise empty delta before the first token
    final,     // finish_reason / usage chunk
    other,
};

/// Classifies one SSE data payload from a chat/completions stream. The
/// first `content` chunk is the "first token" for TTFT purposes; role-only
/// preamble chunks do not count.
ChunkKind classify_chunk(const std::string& payload);

/// Extracts the content/text delta if present and non-empty.
std::optional<std::string> chunk_content(const std::string& payload);

}  // namespace llmgrid
