#pragma once

#include <atomic>
#include <cstdint>
#include <string>

namespace llmgrid {

/// Control-plane counters exposed on the metrics gateway's /metrics.
struct Counters {
    std::atomic<std::uint64_t> requests_routed{0};
    std::atomic<std::uint64_t> auth_cache_hits{0};
    std::atomic<std::uint64_t> auth_cache_misses{0};
    std::atomic<std::uint64_t> upstream_retries{0};
    std::atomic<std::uint64_t> upstream_failures{0};
    std::atomic<std::uint64_t> reconcile_runs{0};
    std::atomic<std::uint64_t> reconcile_submits{0};
    std::atomic<std::uint64_t> reconcile_cancels{0};
    std::atomic<std::uint64_t> endpoints_marked_ready{0};
    std::atomic<std::uint64_t> jobs_expired{0};
    std::atomic<std::uint64_t> alert_firings{0};
    std::atomic<std::uint64_t> scale_webhooks{0};
    std::atomic<std::uint64_t> scale_webhooks_duplicate{0};

    /// Prometheus text exposition of all counters (llmgrid_* namespace).
    std::string exposition(std::uint64_t auth_store_lookups) const;
};

}  // namespace llmgrid
