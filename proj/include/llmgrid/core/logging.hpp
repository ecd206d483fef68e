#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "llmgrid/core/time.hpp"

namespace llmgrid {

/// Structured JSON-lines logger. One line per event:
///   {"t":<us>,"component":"job_worker","event":"submit",...}
/// Keys are emitted sorted, so a log captured under the manual clock is
/// byte-stable across runs with the same seed.
class Logger {
public:
    using Sink = std::function<void(const std::string& line)>;
    using ClockFn = std::function<TimeUs()>;

    Logger(Sink sink, ClockFn clock);

    void event(std::string_view component, std::string_view name);
    void event(std::string_view component, std::string_view name,
               const nlohmann::json& fields);

    static Sink stderr_sink();
    static Sink null_sink();
    static Sink file_sink(const std::string& path);
    /// Appends lines to the given vector (guarded); for tests and the
    /// determinism harness.
    static Sink vector_sink(std::shared_ptr<std::vector<std::string>> out);

private:
    Sink sink_;
    ClockFn clock_;
    std::mutex mu_;
};

}  // namespace llmgrid
