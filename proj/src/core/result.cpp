#include "llmgrid/core/result.hpp"

namespace llmgrid {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::conflict: return "conflict";
        case Errc::referential_violation: return "referential_violation";
        case Errc::not_found: return "not_found";
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::unauthorized: return "unauthorized";
        case Errc::missing_credentials: return "missing_credentials";
        case Errc::already_registered: return "already_registered";
        case Errc::unknown_job: return "unknown_job";
        case Errc::unknown_model: return "unknown_model";
        case Errc::unknown_configuration: return "unknown_configuration";
        case Errc::no_endpoint_ready: return "no_endpoint_ready";
        case Errc::port_range_exhausted: return "port_range_exhausted";
        case Errc::scheduler_unavailable: return "scheduler_unavailable";
        case Errc::submit_rejected: return "submit_rejected";
        case Errc::malformed_submit_string: return "malformed_submit_string";
        case Errc::unresolved_placeholder: return "unresolved_placeholder";
        case Errc::upstream_unreachable: return "upstream_unreachable";
        case Errc::malformed_payload: return "malformed_payload";
        case Errc::malformed_trace: return "malformed_trace";
        case Errc::spec_mismatch: return "spec_mismatch";
        case Errc::insufficient_tokens: return "insufficient_tokens";
        case Errc::target_unreachable: return "target_unreachable";
        case Errc::mode_error: return "mode_error";
        case Errc::timeout: return "timeout";
        case Errc::io_error: return "io_error";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace llmgrid
