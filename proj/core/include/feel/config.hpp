#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "feel/simulator.hpp"

namespace feel {

/// `key=value` pairs applied after the file, in order.
using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Splits "key=value" (whitespace around either side is ignored).
std::pair<std::string, std::string> split_override(std::string_view text);

/// Parses flat `key = value` lines; `#` starts a comment. Keys not present
/// keep their reference-scenario defaults. Throws std::invalid_argument for
/// unknown keys, malformed values, or a config that fails validation.
SimConfig parse_config_text(std::string_view text, const Overrides& overrides = {});

/// Same, reading from a file. Throws std::runtime_error if it cannot be read.
SimConfig parse_config(const std::filesystem::path& path, const Overrides& overrides = {});

/// Applies a single key. Throws std::invalid_argument naming the key.
void apply_setting(SimConfig& cfg, std::string_view key, std::string_view value);

/// Every key with its resolved value, one per line, in a fixed order. Feeding
/// the text back through parse_config_text reproduces `cfg` exactly.
std::string to_config_text(const SimConfig& cfg);

/// Names of all recognised keys, in the order to_config_text writes them.
std::vector<std::string_view> config_keys();

}  // namespace feel
