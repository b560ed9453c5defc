/*
Copyright 2026 The EdgePlacer Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/**
 * @file config.hpp
 *
 * JSON experiment configuration. A user file is merged over the full
 * default document; keys absent from the defaults are rejected, so the
 * default document doubles as the schema. `--set a.b=value` overrides use
 * the same dotted paths.
 */

#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "edgeplacer/harness.hpp"

namespace edgeplacer {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every recognised key with its default value.
nlohmann::json default_config_json();

/// Merges `user` over the defaults; throws ConfigError on unknown keys.
nlohmann::json merge_config(const nlohmann::json &user);

/// Reads and merges a config file. A relative trace.file is resolved against
/// the config file's directory.
nlohmann::json load_config_json(const std::string &path);

/// Applies "dotted.key=value". The value is parsed as JSON when possible and
/// kept as a string otherwise. Throws ConfigError for unknown keys.
void apply_override(nlohmann::json &doc, const std::string &assignment);

/// Converts a merged document; throws ConfigError on type or range errors.
ExperimentConfig config_from_json(const nlohmann::json &doc);

/// load_config_json + overrides + config_from_json.
ExperimentConfig load_config(const std::string &path, std::span<const std::string> overrides);

}  // namespace edgeplacer
