// paralabel/metrics.hpp
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
// Entity scoring: exact-match precision/recall/F1 over (type, text)
// multisets and mean word-level edit distance under an optimal
// one-to-one assignment.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace paralabel {

struct EvalReport {
  long long true_positives = 0;
  long long predicted_count = 0;
  long long gold_count = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mean_edit_distance = 0.0;
};

// (type, normalized text) pair; the unit of exact-match comparison.
using EntityKey = std::pair<std::string, std::string>;

// Joins token texts with single spaces; empty tokens and runs of internal
// whitespace collapse. Case is preserved (use ignore_case at comparison).
std::string normalize_entity_text(const std::vector<std::string>& tokens);

// Multiset intersection size over (type, text); fills the P/R/F1 part.
EvalReport exact_match(const std::vector<EntityKey>& pred,
                       const std::vector<EntityKey>& gold);

// Minimal insertions + deletions + substitutions over word tokens.
int word_levenshtein(const std::vector<std::string>& a,
                     const std::vector<std::string>& b);

// Minimum-cost perfect assignment on a square cost matrix.
int64_t min_cost_assignment(const std::vector<std::vector<int64_t>>& cost);

// Total cost of the optimal one-to-one matching between pred and gold
// entity token sequences; an unmatched entity costs its own token length.
int64_t assignment_edit_cost(const std::vector<std::vector<std::string>>& pred,
                             const std::vector<std::vector<std::string>>& gold);

// assignment_edit_cost / max(|pred|, |gold|, 1).
double mean_edit_distance(const std::vector<std::vector<std::string>>& pred,
                          const std::vector<std::vector<std::string>>& gold);

// Corpus accumulator. Exact-match counts pool corpus-wide; edit cost and
// its per-document denominators pool likewise, so the corpus mean is
// total cost / total max(|pred_d|, |gold_d|).
class CorpusEval {
 public:
  void add_document(const std::vector<EntityKey>& pred_keys,
                    const std::vector<EntityKey>& gold_keys,
                    const std::vector<std::vector<std::string>>& pred_tokens,
                    const std::vector<std::vector<std::string>>& gold_tokens);
  EvalReport report() const;
  long long documents() const { return documents_; }

 private:
  long long tp_ = 0;
  long long predicted_ = 0;
  long long gold_ = 0;
  int64_t edit_cost_ = 0;
  int64_t edit_denom_ = 0;
  long long documents_ = 0;
};

std::string serialize_report(const EvalReport& report, long long documents);

// Fixed-width table for terminal output.
std::string render_report_table(const EvalReport& report, long long documents);

}  // namespace paralabel
