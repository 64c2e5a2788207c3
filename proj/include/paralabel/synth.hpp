// paralabel/synth.hpp
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
// Deterministic synthetic caption pages: court header, case number,
// party block, and attorney profile blocks laid out in columns, with
// ground-truth entities and the reformatted image-level label text.

#pragma once

#include <cstdint>
#include <vector>

#include "paralabel/document.hpp"

namespace paralabel {
namespace synth {

struct SynthConfig {
  uint64_t seed = 0;
  int columns = 2;            // 1 or 2
  int profiles_per_page = 2;  // 1..6
  double noise_rate = 0.0;    // per-character substitution probability
  bool scramble = true;       // interleave column reading order
};

void validate(const SynthConfig& cfg);

struct SynthResult {
  Document doc;                    // noise applied when noise_rate > 0
  std::vector<NamedEntity> gold;   // token order = visual reading order
  InexactLabel label;              // clean reformatted text, per profile
};

// Same config -> byte-identical serialized outputs.
SynthResult generate(const SynthConfig& cfg);

// Substitutes each alphabetic character with a different random letter
// (case preserved) with probability noise_rate. Geometry untouched.
Document corrupt(const Document& doc, double noise_rate, uint64_t seed);

// Every distinct word the generator can emit, for dissimilarity checks.
std::vector<std::string> vocabulary();

}  // namespace synth
}  // namespace paralabel
