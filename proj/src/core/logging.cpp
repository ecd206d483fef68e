#include "llmgrid/core/logging.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

namespace llmgrid {

Logger::Logger(Sink sink, ClockFn clock) : sink_(std::move(sink)), clock_(std::move(clock)) {}

void Logger::event(std::string_view component, std::string_view name) {
    event(component, name, nlohmann::json::object());
}

void Logger::event(std::string_view component, std::string_view name,
                   const nlohmann::json& fields) {
    nlohmann::json line = fields.is_object() ? fields : nlohmann::json::object();
    line["t"] = clock_();
    line["component"] = std::string(component);
    line["event"] = std::string(name);
    std::string s = line.dump();
    std::lock_guard lk(mu_);
    sink_(s);
}

Logger::Sink Logger::stderr_sink() {
    return [](const std::string& line) {
        std::fputs(line.c_str(), stderr);
        std::fputc('\n', stderr);
    };
}

Logger::Sink Logger::null_sink() {
    return [](const std::string&) {};
}

Logger::Sink Logger::file_sink(const std::string& path) {
    auto out = std::make_shared<std::ofstream>(path, std::ios::app);
    return [out](const std::string& line) { (*out) << line << '\n' << std::flush; };
}

Logger::Sink Logger::vector_sink(std::shared_ptr<std::vector<std::string>> out) {
    return [out](const std::string& line) { out->push_back(line); };
}

}  // namespace llmgrid
