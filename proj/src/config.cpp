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

#include "edgeplacer/config.hpp"

#include <filesystem>
#include <fstream>
#include <type_traits>

namespace edgeplacer {

using nlohmann::json;

namespace {

json range_json(const Range &r) { return json::array({r.lo, r.hi}); }

Range range_from(const json &j, const char *key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(std::string("scenario.") + key + " must be a [lo, hi] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void merge_into(json &base, const json &user, const std::string &prefix) {
  if (!user.is_object()) throw ConfigError("config section '" + prefix + "' must be an object");
  for (const auto &[key, value] : user.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!base.contains(key)) throw ConfigError("unknown config key '" + path + "'");
    if (base[key].is_object()) {
      merge_into(base[key], value, path);
    } else {
      base[key] = value;
    }
  }
}

template <typename T>
T get_as(const json &doc, const char *section, const char *key) {
  try {
    const json &j = doc.at(section).at(key);
    if constexpr (std::is_integral_v<T> && std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
      if (!j.is_number_unsigned()) {
        throw ConfigError(std::string("config key '") + section + "." + key +
                          "' must be a nonnegative integer");
      }
    }
    return j.get<T>();
  } catch (const json::exception &e) {
    throw ConfigError(std::string("config key '") + section + "." + key + "': " + e.what());
  }
}

}  // namespace

json default_config_json() {
  const ExperimentConfig d;
  const GeneratorConfig &g = d.generator;
  return json{
      {"scenario",
       {{"nodes", g.node_count},
        {"horizon", d.horizon},
        {"frame_len", d.frame_len},
        {"budget_avg", d.budget_avg},
        {"seed", d.scenario_seed},
        {"backhaul_mbps", g.backhaul_mbps},
        {"backhaul_matrix", json::array()},
        {"spectral_efficiency", g.spectral_efficiency},
        {"input_size_mb", range_json(g.input_size_mb)},
        {"workload_gcycles", range_json(g.workload_gcycles)},
        {"bandwidth_mhz", range_json(g.bandwidth_mhz)},
        {"capacity_ghz", range_json(g.capacity_ghz)},
        {"container_size_mb", range_json(g.container_size_mb)},
        {"unit_migration_cost", range_json(g.unit_migration_cost)}}},
      {"trace", {{"file", ""}, {"seed", d.trace.seed}, {"stickiness", d.trace.stickiness}}},
      {"policy",
       {{"name", json::array({"osp"})},
        {"v", 100.0},
        {"theta", 50.0},
        {"beta", 0.65},
        {"lm_gamma", d.policy.lm_gamma},
        {"plm_weight", d.policy.plm_weight}}},
      {"predictor",
       {{"kind", "oracle_noisy"},
        {"preset", "lstm"},
        {"accuracies", json::array()},
        {"window", d.predictor.window},
        {"seed", d.predictor.seed}}},
      {"sweep", {{"axis", "none"}, {"values", json::array()}}},
      {"output", {{"path", ""}, {"per_slot", false}}},
  };
}

json merge_config(const json &user) {
  json doc = default_config_json();
  merge_into(doc, user, "");
  return doc;
}

json load_config_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json user;
  try {
    user = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  json doc = merge_config(user);
  const auto &file = doc["trace"]["file"];
  if (file.is_string() && !file.get<std::string>().empty()) {
    std::filesystem::path trace(file.get<std::string>());
    if (trace.is_relative()) {
      doc["trace"]["file"] = (std::filesystem::path(path).parent_path() / trace).string();
    }
  }
  return doc;
}

void apply_override(json &doc, const std::string &assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' must look like key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);

  json *node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->is_object() || !node->contains(part)) {
      throw ConfigError("override names unknown config key '" + key + "'");
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (node->is_object()) throw ConfigError("override '" + key + "' names a section, not a value");

  json value = json::parse(text, nullptr, false);
  *node = value.is_discarded() ? json(text) : value;
}

ExperimentConfig config_from_json(const json &doc) {
  ExperimentConfig cfg;
  GeneratorConfig &g = cfg.generator;
  const json &scn = doc.at("scenario");
  g.node_count = get_as<std::size_t>(doc, "scenario", "nodes");
  cfg.horizon = get_as<std::size_t>(doc, "scenario", "horizon");
  cfg.frame_len = get_as<std::size_t>(doc, "scenario", "frame_len");
  cfg.budget_avg = get_as<double>(doc, "scenario", "budget_avg");
  cfg.scenario_seed = get_as<std::uint64_t>(doc, "scenario", "seed");
  g.backhaul_mbps = get_as<double>(doc, "scenario", "backhaul_mbps");
  g.backhaul_matrix = get_as<std::vector<double>>(doc, "scenario", "backhaul_matrix");
  g.spectral_efficiency = get_as<double>(doc, "scenario", "spectral_efficiency");
  g.input_size_mb = range_from(scn.at("input_size_mb"), "input_size_mb");
  g.workload_gcycles = range_from(scn.at("workload_gcycles"), "workload_gcycles");
  g.bandwidth_mhz = range_from(scn.at("bandwidth_mhz"), "bandwidth_mhz");
  g.capacity_ghz = range_from(scn.at("capacity_ghz"), "capacity_ghz");
  g.container_size_mb = range_from(scn.at("container_size_mb"), "container_size_mb");
  g.unit_migration_cost = range_from(scn.at("unit_migration_cost"), "unit_migration_cost");

  cfg.trace.file = get_as<std::string>(doc, "trace", "file");
  cfg.trace.seed = get_as<std::uint64_t>(doc, "trace", "seed");
  cfg.trace.stickiness = get_as<double>(doc, "trace", "stickiness");

  try {
    const json &names = doc.at("policy").at("name");
    cfg.policies.clear();
    if (names.is_string()) {
      cfg.policies.push_back(parse_policy(names.get<std::string>()));
    } else {
      for (const auto &n : names) cfg.policies.push_back(parse_policy(n.get<std::string>()));
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("config key 'policy.name': ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("config key 'policy.name': ") + e.what());
  }
  cfg.policy.v = get_as<double>(doc, "policy", "v");
  cfg.policy.theta = get_as<double>(doc, "policy", "theta");
  cfg.policy.beta = get_as<double>(doc, "policy", "beta");
  cfg.policy.lm_gamma = get_as<double>(doc, "policy", "lm_gamma");
  cfg.policy.plm_weight = get_as<double>(doc, "policy", "plm_weight");

  try {
    cfg.predictor.kind = parse_predictor(get_as<std::string>(doc, "predictor", "kind"));
    auto acc = get_as<std::vector<double>>(doc, "predictor", "accuracies");
    cfg.predictor.accuracies =
        acc.empty() ? accuracy_presets::by_name(get_as<std::string>(doc, "predictor", "preset")) : acc;
    cfg.axis = parse_axis(get_as<std::string>(doc, "sweep", "axis"));
  } catch (const std::invalid_argument &e) {
    throw ConfigError(e.what());
  }
  cfg.predictor.window = get_as<std::size_t>(doc, "predictor", "window");
  cfg.predictor.seed = get_as<std::uint64_t>(doc, "predictor", "seed");
  cfg.axis_values = get_as<std::vector<double>>(doc, "sweep", "values");
  cfg.output_path = get_as<std::string>(doc, "output", "path");
  cfg.per_slot = get_as<bool>(doc, "output", "per_slot");

  try {
    cfg.validate();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string &path, std::span<const std::string> overrides) {
  json doc = load_config_json(path);
  for (const std::string &o : overrides) apply_override(doc, o);
  return config_from_json(doc);
}

}  // namespace edgeplacer
