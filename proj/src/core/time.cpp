#include "llmgrid/core/time.hpp"

#include <cstdio>

namespace llmgrid {

std::string format_duration(TimeUs d) {
    char buf[64];
    if (d < kMillisecond) {
        std::snprintf(buf, sizeof(buf), "%lldus", static_cast<long long>(d));
    } else if (d < kSecond) {
        std::snprintf(buf, sizeof(buf), "%.1fms", static_cast<double>(d) / kMillisecond);
    } else if (d < kMinute) {
        std::snprintf(buf, sizeof(buf), "%.2fs", static_cast<double>(d) / kSecond);
    } else {
        std::snprintf(buf, sizeof(buf), "%.1fmin", static_cast<double>(d) / kMinute);
    }
    return buf;
}

}  // namespace llmgrid
