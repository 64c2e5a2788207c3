// src/strings.cpp
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

#include "paralabel/strings.hpp"

#include <algorithm>
#include <cctype>

namespace paralabel {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return lower(c); });
  return out;
}

std::vector<std::string> tokenize_whitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string normalize_token(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (is_alnum(c)) out += lower(c);
  }
  if (out.empty()) return to_lower_ascii(s);
  return out;
}

int levenshtein_bytes(std::string_view a, std::string_view b) {
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

double token_similarity(std::string_view a, std::string_view b) {
  std::string na = normalize_token(a);
  std::string nb = normalize_token(b);
  if (na == nb) return 1.0;
  size_t longest = std::max(na.size(), nb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_bytes(na, nb)) /
                   static_cast<double>(longest);
}

bool contains_standalone_word(std::string_view text, std::string_view word) {
  if (word.empty()) return false;
  std::string haystack = to_lower_ascii(text);
  std::string needle = to_lower_ascii(word);
  size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_alpha(haystack[pos - 1]);
    size_t end = pos + needle.size();
    bool right_ok = end == haystack.size() || !is_alpha(haystack[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::string title_case(std::string_view s) {
  std::string out(s);
  bool word_start = true;
  for (char& c : out) {
    if (is_space(c)) {
      word_start = true;
    } else if (is_alpha(c)) {
      c = word_start ? static_cast<char>(std::toupper(
                           static_cast<unsigned char>(c)))
                     : lower(c);
      word_start = false;
    } else if (is_alnum(c)) {
      // A leading digit counts as the word start ("1st" stays "1st").
      word_start = false;
    }
  }
  return out;
}

}  // namespace paralabel
