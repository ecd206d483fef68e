#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace llmgrid {

/// All timestamps and durations are integer microseconds. Sim clocks start at
/// zero; real clocks are anchored to the wall clock at process start.
using TimeUs = std::int64_t;

constexpr TimeUs kMicrosecond = 1;
constexpr TimeUs kMillisecond = 1000;
constexpr TimeUs kSecond = 1000 * kMillisecond;
constexpr TimeUs kMinute = 60 * kSecond;

constexpr TimeUs ms(std::int64_t v) { return v * kMillisecond; }
constexpr TimeUs seconds(std::int64_t v) { return v * kSecond; }
constexpr TimeUs minutes(std::int64_t v) { return v * kMinute; }

inline double to_seconds(TimeUs t) { return static_cast<double>(t) / kSecond; }
inline TimeUs from_seconds(double s) { return static_cast<TimeUs>(s * kSecond); }

inline TimeUs steady_now_us() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

inline TimeUs wall_now_us() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

std::string format_duration(TimeUs d);

}  // namespace llmgrid
