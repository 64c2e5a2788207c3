// src/config.cpp
//
// Copyright 2026 The paralabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paralabel/config.hpp"

#include "json.hpp"

#include "paralabel/errors.hpp"

namespace paralabel {

namespace {

using json = nlohmann::ordered_json;

template <typename T>
void read_key(const json& obj, const char* key, T& into) {
  if (!obj.contains(key)) return;
  try {
    into = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("config key '") + key +
                          "' has the wrong type");
  }
}

}  // namespace

void validate(const PipelineConfig& cfg) {
  validate(cfg.seg);
  if (cfg.sim_threshold < 0.0 || cfg.sim_threshold > 1.0) {
    throw ValidationError("sim_threshold must be in [0, 1]");
  }
  if (cfg.psi < 0.0) throw ValidationError("psi must be non-negative");
  if (cfg.phi < 0) throw ValidationError("phi must be non-negative");
  if (cfg.confidence_threshold < 0.0 || cfg.confidence_threshold > 1.0) {
    throw ValidationError("confidence_threshold must be in [0, 1]");
  }
  if (cfg.category.empty()) throw ValidationError("category must be non-empty");
}

PipelineConfig parse_config(std::string_view json_text) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError("config is not valid JSON at byte " +
                      std::to_string(e.byte));
  }
  if (!obj.is_object()) throw ValidationError("config must be a JSON object");

  static const char* const kKnown[] = {
      "kernel_w",         "kernel_h",        "patience",
      "min_aggregation_ratio", "max_iterations",  "sim_threshold",
      "psi",              "phi",             "activation_mode",
      "category",         "confidence_threshold", "drop_pro_se",
      "ignore_case"};
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : kKnown) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("unknown config key '" + item.key() + "'");
    }
  }

  PipelineConfig cfg;
  read_key(obj, "kernel_w", cfg.seg.kernel_w);
  read_key(obj, "kernel_h", cfg.seg.kernel_h);
  read_key(obj, "patience", cfg.seg.patience);
  read_key(obj, "min_aggregation_ratio", cfg.seg.min_aggregation_ratio);
  read_key(obj, "max_iterations", cfg.seg.max_iterations);
  read_key(obj, "sim_threshold", cfg.sim_threshold);
  read_key(obj, "psi", cfg.psi);
  read_key(obj, "phi", cfg.phi);
  if (obj.contains("activation_mode")) {
    std::string name;
    read_key(obj, "activation_mode", name);
    cfg.activation_mode = activation_mode_from_name(name);
  }
  read_key(obj, "category", cfg.category);
  read_key(obj, "confidence_threshold", cfg.confidence_threshold);
  read_key(obj, "drop_pro_se", cfg.drop_pro_se);
  read_key(obj, "ignore_case", cfg.ignore_case);
  validate(cfg);
  return cfg;
}

std::string serialize_config(const PipelineConfig& cfg) {
  json obj = json::object();
  obj["kernel_w"] = cfg.seg.kernel_w;
  obj["kernel_h"] = cfg.seg.kernel_h;
  obj["patience"] = cfg.seg.patience;
  obj["min_aggregation_ratio"] = cfg.seg.min_aggregation_ratio;
  obj["max_iterations"] = cfg.seg.max_iterations;
  obj["sim_threshold"] = cfg.sim_threshold;
  obj["psi"] = cfg.psi;
  obj["phi"] = cfg.phi;
  obj["activation_mode"] = activation_mode_name(cfg.activation_mode);
  obj["category"] = cfg.category;
  obj["confidence_threshold"] = cfg.confidence_threshold;
  obj["drop_pro_se"] = cfg.drop_pro_se;
  obj["ignore_case"] = cfg.ignore_case;
  return obj.dump(2) + "\n";
}

}  // namespace paralabel
