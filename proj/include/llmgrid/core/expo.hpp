#pragma once

#include <map>
#include <optional>
#include <string>

namespace llmgrid {

/// Prometheus text exposition format, the subset the sim and the control
/// plane emit: "# HELP", "# TYPE", and unlabeled "<name> <value>" samples.
std::string expo_line(std::string_view name, double value);
std::string expo_header(std::string_view name, std::string_view type, std::string_view help);

/// Parses unlabeled samples out of an exposition body. Labeled series are
/// ignored (the sim does not emit them).
std::map<std::string, double> parse_exposition(const std::string& body);

std::optional<double> exposition_value(const std::string& body, const std::string& metric);

}  // namespace llmgrid
