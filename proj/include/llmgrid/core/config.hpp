#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "llmgrid/core/result.hpp"
#include "llmgrid/core/time.hpp"

namespace llmgrid {

/// JSON config file with environment overrides. An env var
/// LLMGRID_<SECTION>__<KEY>=value (double underscore between path parts,
/// case-insensitive) replaces root[section][key]; the value is parsed as
/// JSON when possible and taken as a string otherwise.
class ConfigFile {
public:
    ConfigFile() : root_(nlohmann::json::object()) {}
    explicit ConfigFile(nlohmann::json root) : root_(std::move(root)) {}

    static Result<ConfigFile> load(const std::string& path, bool apply_env = true);

    void apply_env_overrides(const char* prefix = "LLMGRID_");

    const nlohmann::json& root() const { return root_; }
    nlohmann::json section(const std::string& name) const;

    template <class T>
    T get_or(const nlohmann::json& sec, const std::string& key, T fallback) const {
        if (sec.is_object() && sec.contains(key)) {
            try {
                return sec.at(key).get<T>();
            } catch (const nlohmann::json::exception&) {
            }
        }
        return fallback;
    }

private:
    nlohmann::json root_;
};

}  // namespace llmgrid
