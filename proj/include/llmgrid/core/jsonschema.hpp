#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "llmgrid/core/result.hpp"

namespace llmgrid {

/// Validates a document against a JSON-Schema subset: type, properties,
/// required, additionalProperties (bool or schema), items, minItems,
/// pattern, enum. Enough for the vendored Prometheus http_sd schema.
Result<void> validate_json_schema(const nlohmann::json& schema, const nlohmann::json& doc);

Result<nlohmann::json> load_json_file(const std::string& path);

}  // namespace llmgrid
