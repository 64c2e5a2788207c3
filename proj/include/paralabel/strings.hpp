// paralabel/strings.hpp
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
// Byte-oriented text helpers. All case handling is ASCII; multibyte
// sequences pass through untouched.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace paralabel {

std::string to_lower_ascii(std::string_view s);

// Split on runs of whitespace; never returns empty tokens.
std::vector<std::string> tokenize_whitespace(std::string_view s);

// Lowercase with non-alphanumeric bytes stripped. Falls back to the
// lowercased input when stripping leaves nothing (pure punctuation like
// "&" must still be comparable).
std::string normalize_token(std::string_view s);

// Byte-level edit distance.
int levenshtein_bytes(std::string_view a, std::string_view b);

// 1 - levenshtein(a', b') / max(|a'|, |b'|) over normalized tokens;
// 1.0 when both normalize to the same string.
double token_similarity(std::string_view a, std::string_view b);

// True when `word` occurs in `text` as a standalone word, case-insensitive,
// delimited by non-letters or string boundaries.
bool contains_standalone_word(std::string_view text, std::string_view word);

// Capitalizes the first letter of every whitespace-separated word and
// lowercases the rest (ASCII).
std::string title_case(std::string_view s);

}  // namespace paralabel
