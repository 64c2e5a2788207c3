// paralabel/config.hpp
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
//
// One flat config drives every pipeline stage. JSON files may set any
// subset of the keys; unknown keys are rejected so typos cannot silently
// fall back to defaults.

#pragma once

#include <string>
#include <string_view>

#include "paralabel/align.hpp"
#include "paralabel/segment.hpp"

namespace paralabel {

struct PipelineConfig {
  SegConfig seg;

  // Label-to-word alignment.
  double sim_threshold = 0.8;  // minimum token similarity for a match

  // Line activation and region selection.
  double psi = 0.1;  // per-line normalized mass must exceed this
  int phi = 1;       // active line count per region must exceed this
  ActivationMode activation_mode = ActivationMode::kSum;

  // Pseudo label emission and post-processing.
  std::string category = "attorney_profile";
  double confidence_threshold = 0.5;
  bool drop_pro_se = false;

  // Evaluation.
  bool ignore_case = false;
};

// Throws ValidationError on out-of-range fields.
void validate(const PipelineConfig& cfg);

// Parses a JSON object of config keys. Missing keys keep their defaults;
// unknown keys throw ValidationError; malformed JSON throws FormatError.
PipelineConfig parse_config(std::string_view json_text);

std::string serialize_config(const PipelineConfig& cfg);

}  // namespace paralabel
