#pragma once

#include <cstdint>
#include <string>

#include "cohsim/scenarios.hpp"

namespace cohsim {

/// Parses a YAML config document into a fully resolved ScenarioConfig:
/// per-scenario defaults are applied first, then the document's keys
/// overlaid. Unknown keys and semantic errors (unknown scenario, fragment
/// outside the grid, ...) raise ConfigError; syntax errors report
/// line/column. The grammar is documented in the README.
ScenarioConfig parse_config(const std::string& text);

/// Canonical YAML form of a resolved config (fixed key order, 17
/// significant digits). parse(serialize(cfg)) reproduces cfg exactly.
std::string serialize_config(const ScenarioConfig& cfg);

/// State kinds a scenario supports.
std::vector<std::string> supported_states(const std::string& scenario);

/// Structural + semantic validation (also called by parse_config).
void validate_config(const ScenarioConfig& cfg);

/// FNV-1a 64-bit, used for config hashes and output checksums.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string fnv1a64_hex(const std::string& bytes);

/// Stable hash of the canonical serialized config.
std::string config_hash(const ScenarioConfig& cfg);

}  // namespace cohsim
