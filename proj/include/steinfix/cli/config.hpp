#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steinfix/common.hpp"

namespace steinfix::cli {

/// Validated run configuration: a command name plus typed key/value
/// parameters with defaults filled in. Unknown keys and out-of-range
/// values are rejected with messages naming the offending line and key.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> values;
    std::uint64_t seed = 0;
    std::string out_path;

    bool has(const std::string& key) const { return values.count(key) > 0; }
    long long get_int(const std::string& key) const;
    double get_real(const std::string& key) const;
    const std::string& get_str(const std::string& key) const;
};

const std::vector<std::string>& known_commands();

/// Parses the flat `key = value` format (# comments). The command may come
/// from a `command = ...` line or the hint (a CLI subcommand); flag
/// overrides are merged on top by the caller before validation.
RunConfig parse_config_text(const std::string& text, const std::string& command_hint = "");

/// Fills in per-command defaults and validates required keys, types and
/// documented ranges. Throws ConfigError.
void validate_config(RunConfig& cfg);

/// Convenience used by tests and the tool: parse, merge overrides, validate.
RunConfig parse_config(const std::string& text, const std::string& command_hint = "",
                       const std::map<std::string, std::string>& overrides = {});

}  // namespace steinfix::cli
