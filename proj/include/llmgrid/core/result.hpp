#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace llmgrid {

enum class Errc {
    conflict,
    referential_violation,
    not_found,
    invalid_argument,
    unauthorized,
    missing_credentials,
    already_registered,
    unknown_job,
    unknown_model,
    unknown_configuration,
    no_endpoint_ready,
    port_range_exhausted,
    scheduler_unavailable,
    submit_rejected,
    malformed_submit_string,
    unresolved_placeholder,
    upstream_unreachable,
    malformed_payload,
    malformed_trace,
    spec_mismatch,
    insufficient_tokens,
    target_unreachable,
    mode_error,
    timeout,
    io_error,
    internal,
};

const char* errc_name(Errc c);

struct Error {
    Errc code = Errc::internal;
    std::string message;
};

inline Error make_error(Errc code, std::string message = {}) {
    return Error{code, std::move(message)};
}

/// Minimal expected-style result; GCC 11 has no std::expected.
template <class T>
class [[nodiscard]] Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error err) : v_(std::move(err)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    T& value() & { assert(ok()); return std::get<T>(v_); }
    const T& value() const& { assert(ok()); return std::get<T>(v_); }
    T&& value() && { assert(ok()); return std::get<T>(std::move(v_)); }

    const Error& error() const { assert(!ok()); return std::get<Error>(v_); }
    Errc code() const { return ok() ? Errc::internal : error().code; }

    T value_or(T fallback) const { return ok() ? value() : std::move(fallback); }

private:
    std::variant<T, Error> v_;
};

template <>
class [[nodiscard]] Result<void> {
public:
    Result() = default;
    Result(Error err) : err_(std::move(err)), failed_(true) {}

    bool ok() const { return !failed_; }
    explicit operator bool() const { return ok(); }

    const Error& error() const { assert(failed_); return err_; }
    Errc code() const { return ok() ? Errc::internal : err_.code; }

private:
    Error err_;
    bool failed_ = false;
};

inline Result<void> ok_result() { return Result<void>(); }

}  // namespace llmgrid
