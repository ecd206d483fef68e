#include "llmgrid/core/http.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace llmgrid {

namespace {
bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}
}  // namespace

std::optional<std::string> header_get(const std::map<std::string, std::string>& h,
                                      std::string_view name) {
    for (const auto& [k, v] : h) {
        if (iequals(k, name)) return v;
    }
    return std::nullopt;
}

std::optional<std::string> bearer_token(const BusRequest& req) {
    auto auth = header_get(req.headers, "Authorization");
    if (!auth) return std::nullopt;
    constexpr std::string_view prefix = "Bearer ";
    if (auth->size() <= prefix.size() || !iequals(std::string_view(*auth).substr(0, prefix.size()), prefix))
        return std::nullopt;
    return auth->substr(prefix.size());
}

BusResponse json_response(int status, const std::string& body_json) {
    BusResponse r;
    r.status = status;
    r.headers["Content-Type"] = "application/json";
    r.body = body_json;
    return r;
}

BusResponse error_response(int status, std::string_view code, std::string_view message) {
    nlohmann::json j{{"code", std::string(code)}, {"message", std::string(message)}};
    return json_response(status, j.dump());
}

Result<UrlParts> parse_url(std::string_view url) {
    UrlParts out;
    constexpr std::string_view scheme = "http://";
    if (url.substr(0, scheme.size()) != scheme)
        return make_error(Errc::invalid_argument, "only http:// urls supported");
    std::string_view rest = url.substr(scheme.size());
    auto slash = rest.find('/');
    std::string_view hostport = slash == std::string_view::npos ? rest : rest.substr(0, slash);
    out.path = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
    auto colon = hostport.rfind(':');
    if (colon == std::string_view::npos) {
        out.host = std::string(hostport);
        out.port = 80;
    } else {
        out.host = std::string(hostport.substr(0, colon));
        auto p = hostport.substr(colon + 1);
        int port = 0;
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), port);
        if (ec != std::errc() || ptr != p.data() + p.size() || port <= 0 || port > 65535)
            return make_error(Errc::invalid_argument, "bad port in url");
        out.port = port;
    }
    if (out.host.empty()) return make_error(Errc::invalid_argument, "empty host");
    return out;
}

void InProcBus::bind(const std::string& host, int port, BusHandler handler) {
    std::lock_guard lk(mu_);
    hosts_[host + ":" + std::to_string(port)] = std::move(handler);
}

void InProcBus::unbind(const std::string& host, int port) {
    std::lock_guard lk(mu_);
    hosts_.erase(host + ":" + std::to_string(port));
}

std::optional<BusHandler> InProcBus::lookup(const std::string& host, int port) const {
    std::lock_guard lk(mu_);
    auto it = hosts_.find(host + ":" + std::to_string(port));
    if (it == hosts_.end()) return std::nullopt;
    return it->second;
}

Result<BusResponse> HttpExchange::get(const std::string& host, int port,
                                      const std::string& path, TimeUs timeout) {
    BusRequest req;
    req.method = "GET";
    req.path = path;
    return roundtrip(host, port, req, timeout);
}

Result<BusResponse> HttpExchange::post_json(const std::string& host, int port,
                                            const std::string& path, const std::string& body,
                                            const std::map<std::string, std::string>& headers,
                                            TimeUs timeout) {
    BusRequest req;
    req.method = "POST";
    req.path = path;
    req.headers = headers;
    req.headers["Content-Type"] = "application/json";
    req.body = body;
    return roundtrip(host, port, req, timeout);
}

Result<BusResponse> BusExchange::roundtrip(const std::string& host, int port,
                                           const BusRequest& req, TimeUs) {
    auto handler = bus_.lookup(host, port);
    if (!handler)
        return make_error(Errc::target_unreachable, host + ":" + std::to_string(port));
    return (*handler)(req);
}

Result<BusResponse> RealHttpExchange::roundtrip(const std::string& host, int port,
                                                const BusRequest& req, TimeUs timeout) {
    httplib::Client cli(host, port);
    time_t sec = static_cast<time_t>(timeout / kSecond);
    time_t usec = static_cast<time_t>(timeout % kSecond);
    cli.set_connection_timeout(sec, usec);
    cli.set_read_timeout(sec, usec);
    cli.set_write_timeout(sec, usec);

    httplib::Headers headers;
    for (const auto& [k, v] : req.headers) headers.emplace(k, v);

    httplib::Result res(nullptr, httplib::Error::Unknown);
    if (req.method == "GET") {
        res = cli.Get(req.path, headers);
    } else if (req.method == "POST") {
        std::string content_type = header_get(req.headers, "Content-Type")
                                       .value_or("application/octet-stream");
        httplib::Headers without_ct;
        for (const auto& [k, v] : req.headers) {
            if (!iequals(k, "Content-Type")) without_ct.emplace(k, v);
        }
        res = cli.Post(req.path, without_ct, req.body, content_type);
    } else {
        return make_error(Errc::invalid_argument, "unsupported method " + req.method);
    }

    if (!res) {
        auto err = res.error();
        if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read)
            return make_error(Errc::timeout, httplib::to_string(err));
        return make_error(Errc::target_unreachable, httplib::to_string(err));
    }
    BusResponse out;
    out.status = res->status;
    for (const auto& [k, v] : res->headers) out.headers[k] = v;
    out.body = res->body;
    return out;
}

}  // namespace llmgrid
