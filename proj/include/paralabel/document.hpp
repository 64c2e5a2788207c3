// paralabel/document.hpp
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
// Core document model: pages of OCR lines and words with normalized
// bounding boxes and a canonical reading order, plus the JSON formats
// shared by every pipeline stage.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paralabel/geometry.hpp"

namespace paralabel {

struct Word {
  std::string text;
  BBox bbox;
  int index = 0;  // 0-based position in document reading order

  friend bool operator==(const Word& a, const Word& b) {
    return a.text == b.text && a.bbox == b.bbox && a.index == b.index;
  }
};

struct Line {
  std::string id;
  BBox bbox;
  int word_start = 0;  // first member word index
  int word_end = 0;    // last member word index, inclusive
  int page = 0;

  int word_count() const { return word_end - word_start + 1; }

  friend bool operator==(const Line& a, const Line& b) {
    return a.id == b.id && a.bbox == b.bbox && a.word_start == b.word_start &&
           a.word_end == b.word_end && a.page == b.page;
  }
};

struct Page {
  int width_px = 0;
  int height_px = 0;
  std::vector<Line> lines;

  friend bool operator==(const Page& a, const Page& b) {
    return a.width_px == b.width_px && a.height_px == b.height_px &&
           a.lines == b.lines;
  }
};

struct Document {
  std::string doc_id;
  std::vector<Page> pages;
  std::vector<Word> words;  // reading order: page, then line, then word

  int word_count() const { return static_cast<int>(words.size()); }

  friend bool operator==(const Document& a, const Document& b) {
    return a.doc_id == b.doc_id && a.pages == b.pages && a.words == b.words;
  }
};

struct LabeledEntity {
  std::string type;
  std::string text;
};

// Image-level entity texts for one document, no locations.
struct InexactLabel {
  std::string doc_id;
  std::vector<LabeledEntity> entities;
};

// A typed, ordered token group. Token order is significant and need not
// be increasing in document reading order.
struct NamedEntity {
  std::string type;
  std::vector<int> tokens;
};

// Entity-file record: the token texts are materialized so consumers
// (evaluation, manual review) need no document lookup.
struct EntityRecord {
  std::string type;
  std::string text;
  std::vector<int> token_indices;
};

struct DocEntities {
  std::string doc_id;
  std::vector<EntityRecord> entities;
};

// Throws ValidationError when any type invariant fails: degenerate boxes,
// words outside their line, broken word-index coverage.
void validate_document(const Document& doc);

// Parses the OCR JSON format. Word indices are assigned in reading order
// (page, line, word). Throws FormatError for malformed bytes (with byte
// offset) and ValidationError for invariant violations (with line id).
Document parse_document(std::string_view ocr_json);

std::string serialize_document(const Document& doc);

// The unique line whose [word_start, word_end] covers word_index.
// Throws std::out_of_range for an index outside [0, word_count).
const Line& line_of(const Document& doc, int word_index);

// Member word texts joined with single spaces, reading order.
std::string line_text(const Document& doc, const Line& line);

// Inexact labels: a single {"doc_id", "entities": [...]} object or an
// array of them is accepted; serialization always writes the array form.
std::vector<InexactLabel> parse_inexact_labels(std::string_view text);
std::string serialize_inexact_labels(const std::vector<InexactLabel>& labels);

// Entity files: an array of {"doc_id", "entities": [...]} records.
std::vector<DocEntities> parse_entities_file(std::string_view text);
std::string serialize_entities_file(const std::vector<DocEntities>& docs);

// Builds the file record for one document's extracted entities.
DocEntities materialize_entities(const Document& doc,
                                 const std::vector<NamedEntity>& entities);

}  // namespace paralabel
