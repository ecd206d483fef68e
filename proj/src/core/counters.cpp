#include "llmgrid/core/counters.hpp"

#include "llmgrid/core/expo.hpp"

namespace llmgrid {

std::string Counters::exposition(std::uint64_t auth_store_lookups) const {
    std::string out;
    auto emit = [&](const char* name, const char* help, std::uint64_t v) {
        out += expo_header(name, "counter", help);
        out += expo_line(name, static_cast<double>(v));
    };
    emit("llmgrid_requests_routed_total", "Inference requests forwarded upstream",
         requests_routed.load());
    emit("llmgrid_auth_cache_hits_total", "Authentications served from cache",
         auth_cache_hits.load());
    emit("llmgrid_auth_cache_misses_total", "Authentications that missed the cache",
         auth_cache_misses.load());
    emit("llmgrid_auth_store_lookups_total", "Authentication key lookups hitting the store",
         auth_store_lookups);
    emit("llmgrid_upstream_retries_total", "Forwards retried on another endpoint",
         upstream_retries.load());
    emit("llmgrid_upstream_failures_total", "Forwards failed on all attempts",
         upstream_failures.load());
    emit("llmgrid_reconcile_runs_total", "Reconcile cycles executed", reconcile_runs.load());
    emit("llmgrid_reconcile_submits_total", "Jobs submitted by reconciliation",
         reconcile_submits.load());
    emit("llmgrid_reconcile_cancels_total", "Jobs cancelled by reconciliation",
         reconcile_cancels.load());
    emit("llmgrid_endpoints_marked_ready_total", "Endpoints promoted to ready",
         endpoints_marked_ready.load());
    emit("llmgrid_jobs_expired_total", "Jobs expired and removed", jobs_expired.load());
    emit("llmgrid_alert_firings_total", "Alert rule firings", alert_firings.load());
    emit("llmgrid_scale_webhooks_total", "Scale webhook deliveries applied",
         scale_webhooks.load());
    emit("llmgrid_scale_webhooks_duplicate_total", "Scale webhook duplicates suppressed",
         scale_webhooks_duplicate.load());
    return out;
}

}  // namespace llmgrid
