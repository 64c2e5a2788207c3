// src/metrics.cpp
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

#include "paralabel/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>
#include <map>

#include "json.hpp"

namespace paralabel {

std::string normalize_entity_text(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& tok : tokens) {
    size_t i = 0;
    while (i < tok.size()) {
      while (i < tok.size() && std::isspace(static_cast<unsigned char>(tok[i]))) {
        ++i;
      }
      size_t j = i;
      while (j < tok.size() && !std::isspace(static_cast<unsigned char>(tok[j]))) {
        ++j;
      }
      if (j > i) {
        if (!out.empty()) out += ' ';
        out.append(tok, i, j - i);
      }
      i = j;
    }
  }
  return out;
}

EvalReport exact_match(const std::vector<EntityKey>& pred,
                       const std::vector<EntityKey>& gold) {
  std::map<EntityKey, long long> gold_counts;
  for (const EntityKey& k : gold) ++gold_counts[k];
  long long tp = 0;
  for (const EntityKey& k : pred) {
    auto it = gold_counts.find(k);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++tp;
    }
  }
  EvalReport r;
  r.true_positives = tp;
  r.predicted_count = static_cast<long long>(pred.size());
  r.gold_count = static_cast<long long>(gold.size());
  r.precision = r.predicted_count ? static_cast<double>(tp) / r.predicted_count : 0.0;
  r.recall = r.gold_count ? static_cast<double>(tp) / r.gold_count : 0.0;
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

int word_levenshtein(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  const size_t n = a.size();
  const size_t m = b.size();
  std::vector<int> prev(m + 1);
  std::vector<int> cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

int64_t min_cost_assignment(const std::vector<std::vector<int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return 0;
  // Potential-based shortest augmenting path, O(n^3); 1-based arrays with
  // row/column 0 as scratch.
  const int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
  std::vector<int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0];
      int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  int64_t total = 0;
  for (int j = 1; j <= n; ++j) total += cost[match[j] - 1][j - 1];
  return total;
}

int64_t assignment_edit_cost(const std::vector<std::vector<std::string>>& pred,
                             const std::vector<std::vector<std::string>>& gold) {
  const int n = static_cast<int>(pred.size());
  const int m = static_cast<int>(gold.size());
  if (n == 0 && m == 0) return 0;
  // Pad to a square (n+m)x(n+m) problem: a real-dummy pairing prices the
  // entity as unmatched (its own length), dummy-dummy pairs are free.
  const int size = n + m;
  std::vector<std::vector<int64_t>> cost(size, std::vector<int64_t>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i < n && j < m) {
        cost[i][j] = word_levenshtein(pred[i], gold[j]);
      } else if (i < n) {
        cost[i][j] = static_cast<int64_t>(pred[i].size());
      } else if (j < m) {
        cost[i][j] = static_cast<int64_t>(gold[j].size());
      }
    }
  }
  return min_cost_assignment(cost);
}

double mean_edit_distance(const std::vector<std::vector<std::string>>& pred,
                          const std::vector<std::vector<std::string>>& gold) {
  int64_t denom = std::max<int64_t>(
      {static_cast<int64_t>(pred.size()), static_cast<int64_t>(gold.size()), 1});
  return static_cast<double>(assignment_edit_cost(pred, gold)) /
         static_cast<double>(denom);
}

void CorpusEval::add_document(
    const std::vector<EntityKey>& pred_keys,
    const std::vector<EntityKey>& gold_keys,
    const std::vector<std::vector<std::string>>& pred_tokens,
    const std::vector<std::vector<std::string>>& gold_tokens) {
  EvalReport doc = exact_match(pred_keys, gold_keys);
  tp_ += doc.true_positives;
  predicted_ += doc.predicted_count;
  gold_ += doc.gold_count;
  edit_cost_ += assignment_edit_cost(pred_tokens, gold_tokens);
  edit_denom_ += std::max<int64_t>(static_cast<int64_t>(pred_tokens.size()),
                                   static_cast<int64_t>(gold_tokens.size()));
  ++documents_;
}

EvalReport CorpusEval::report() const {
  EvalReport r;
  r.true_positives = tp_;
  r.predicted_count = predicted_;
  r.gold_count = gold_;
  r.precision = predicted_ ? static_cast<double>(tp_) / predicted_ : 0.0;
  r.recall = gold_ ? static_cast<double>(tp_) / gold_ : 0.0;
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  r.mean_edit_distance =
      edit_denom_ ? static_cast<double>(edit_cost_) / edit_denom_ : 0.0;
  return r;
}

std::string serialize_report(const EvalReport& report, long long documents) {
  nlohmann::json out{{"documents", documents},
                     {"true_positives", report.true_positives},
                     {"predicted_count", report.predicted_count},
                     {"gold_count", report.gold_count},
                     {"precision", report.precision},
                     {"recall", report.recall},
                     {"f1", report.f1},
                     {"mean_edit_distance", report.mean_edit_distance}};
  return out.dump(2) + "\n";
}

std::string render_report_table(const EvalReport& report, long long documents) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "documents            %10lld\n"
                "predicted entities   %10lld\n"
                "gold entities        %10lld\n"
                "true positives       %10lld\n"
                "precision            %10.4f\n"
                "recall               %10.4f\n"
                "f1                   %10.4f\n"
                "mean edit distance   %10.4f\n",
                documents, report.predicted_count, report.gold_count,
                report.true_positives, report.precision, report.recall,
                report.f1, report.mean_edit_distance);
  return buf;
}

}  // namespace paralabel
