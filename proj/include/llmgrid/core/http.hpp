#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "llmgrid/core/result.hpp"
#include "llmgrid/core/time.hpp"

namespace llmgrid {

/// Plain request/response messages used for the unary control-plane paths
/// (registration callback, health probes, metric scrapes, scale webhooks).
/// Streaming inference traffic stays on httplib directly.
struct BusRequest {
    std::string method;  // "GET" / "POST"
    std::string path;    // path only, no host
    std::map<std::string, std::string> headers;
    std::string body;
};

struct BusResponse {
    int status = 200;
    std::map<std::string, std::string> headers;
    std::string body;
};

std::optional<std::string> header_get(const std::map<std::string, std::string>& h,
                                      std::string_view name);

/// Extracts the token from "Authorization: Bearer <token>".
std::optional<std::string> bearer_token(const BusRequest& req);

BusResponse json_response(int status, const std::string& body_json);
BusResponse error_response(int status, std::string_view code, std::string_view message);

struct UrlParts {
    std::string host;
    int port = 80;
    std::string path = "/";
};
Result<UrlParts> parse_url(std::string_view url);

using BusHandler = std::function<BusResponse(const BusRequest&)>;

/// Maps "host:port" to an in-process handler. Stands in for the network in
/// manual-clock scenarios; handlers respond synchronously.
class InProcBus {
public:
    void bind(const std::string& host, int port, BusHandler handler);
    void unbind(const std::string& host, int port);
    std::optional<BusHandler> lookup(const std::string& host, int port) const;

private:
    mutable std::mutex mu_;
    std::map<std::string, BusHandler> hosts_;
};

/// Unary HTTP client interface; one implementation per transport.
class HttpExchange {
public:
    virtual ~HttpExchange() = default;
    virtual Result<BusResponse> roundtrip(const std::string& host, int port,
                                          const BusRequest& req, TimeUs timeout) = 0;

    Result<BusResponse> get(const std::string& host, int port, const std::string& path,
                            TimeUs timeout);
    Result<BusResponse> post_json(const std::string& host, int port, const std::string& path,
                                  const std::string& body,
                                  const std::map<std::string, std::string>& headers,
                                  TimeUs timeout);
};

class BusExchange : public HttpExchange {
public:
    explicit BusExchange(InProcBus& bus) : bus_(bus) {}
    Result<BusResponse> roundtrip(const std::string& host, int port, const BusRequest& req,
                                  TimeUs timeout) override;

private:
    InProcBus& bus_;
};

/// httplib-backed client for real sockets.
class RealHttpExchange : public HttpExchange {
public:
    Result<BusResponse> roundtrip(const std::string& host, int port, const BusRequest& req,
                                  TimeUs timeout) override;
};

}  // namespace llmgrid
