// paralabel/align.hpp
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
// Token-to-word alignment. Attention matrices are either loaded from the
// ATTN interchange format (produced by an external sequence model) or
// synthesized by a deterministic fuzzy-matching aligner. Scores aggregate
// to line level to decide which lines are active.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paralabel/document.hpp"

namespace paralabel {

// rows = document word count (encoder steps), cols = label token count
// (decoder steps). Row-major. Each column sums to 1 (within 1e-3) or is
// exactly zero (a generated, not copied, decoder step).
struct AttentionMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<float> data;

  float at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  float& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
};

// Throws FormatError naming the offending column or entry.
void validate_attention(const AttentionMatrix& m);

// Accepts the binary form (magic "ATTN1\n", u32le rows, u32le cols,
// f32le row-major data) or the JSON form {"rows", "cols", "data"}.
// expected_rows < 0 skips the row check.
AttentionMatrix load_attention(std::string_view bytes, int expected_rows);

std::string save_attention_binary(const AttentionMatrix& m);
std::string save_attention_json(const AttentionMatrix& m);

// Deterministic alignment: label_text is whitespace-tokenized; for each
// token, document words with token_similarity >= sim_threshold compete
// and the one nearest in index to the previous match (initially 0) wins,
// ties to the smaller index. Winning columns are one-hot; tokens with no
// candidate get a zero column.
AttentionMatrix align_tokens(const Document& doc, std::string_view label_text,
                             double sim_threshold);

// Column-wise concatenation; all parts must share the row count.
AttentionMatrix concat_columns(const std::vector<AttentionMatrix>& parts);

struct LineScore {
  std::string line_id;
  double mass = 0.0;      // total attention received by the line's words
  int n_words = 0;
  double normalized = 0.0;  // mass / n_words
};

// One score per line; mass sums the line's word rows over all columns.
// Throws ValidationError when matrix.rows != doc.word_count().
std::vector<LineScore> line_scores(const AttentionMatrix& m,
                                   const Document& doc);

// Lines with normalized score strictly above psi.
std::set<std::string> active_lines(const std::vector<LineScore>& scores,
                                   double psi);

// Per-decoder-step variant: a line is active when any single column's
// line-level mass, normalized by the word count, strictly exceeds psi.
std::set<std::string> active_lines_per_step(const AttentionMatrix& m,
                                            const Document& doc, double psi);

enum class ActivationMode { kSum, kAny };

ActivationMode activation_mode_from_name(const std::string& name);
const char* activation_mode_name(ActivationMode mode);

std::set<std::string> active_lines(const AttentionMatrix& m,
                                   const Document& doc, double psi,
                                   ActivationMode mode);

}  // namespace paralabel
