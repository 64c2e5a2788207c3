// src/document.cpp
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

#include "paralabel/document.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"
#include "paralabel/errors.hpp"

namespace paralabel {

using nlohmann::json;

namespace {

// Word boxes may stick out of their line box by no more than this per side.
constexpr double kContainTol = 1e-6;

BBox bbox_from_json(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") ||
      !j.contains("w") || !j.contains("h")) {
    throw FormatError(what + ": bbox must be an object with x, y, w, h");
  }
  BBox b;
  b.x = j.at("x").get<double>();
  b.y = j.at("y").get<double>();
  b.w = j.at("w").get<double>();
  b.h = j.at("h").get<double>();
  return b;
}

json bbox_to_json(const BBox& b) {
  return json{{"x", b.x}, {"y", b.y}, {"w", b.w}, {"h", b.h}};
}

bool line_contains(const BBox& line, const BBox& word) {
  return word.x >= line.x - kContainTol && word.y >= line.y - kContainTol &&
         word.x + word.w <= line.x + line.w + kContainTol &&
         word.y + word.h <= line.y + line.h + kContainTol;
}

json parse_json_or_throw(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(what) + ": malformed JSON at byte " +
                      std::to_string(e.byte) + " (" + e.what() + ")");
  }
}

InexactLabel inexact_label_from_json(const json& j) {
  if (!j.is_object() || !j.contains("doc_id") || !j.contains("entities")) {
    throw FormatError("inexact label: expected {doc_id, entities}");
  }
  InexactLabel label;
  label.doc_id = j.at("doc_id").get<std::string>();
  for (const auto& je : j.at("entities")) {
    LabeledEntity e;
    e.type = je.at("type").get<std::string>();
    e.text = je.at("text").get<std::string>();
    if (e.text.empty()) {
      throw ValidationError("inexact label for doc '" + label.doc_id +
                            "': entity text empty");
    }
    label.entities.push_back(std::move(e));
  }
  return label;
}

}  // namespace

void validate_document(const Document& doc) {
  int next_word = 0;
  for (size_t p = 0; p < doc.pages.size(); ++p) {
    const Page& page = doc.pages[p];
    if (page.width_px <= 0 || page.height_px <= 0) {
      throw ValidationError("doc '" + doc.doc_id + "' page " +
                            std::to_string(p) + ": non-positive pixel dims");
    }
    for (const Line& line : page.lines) {
      if (line.page != static_cast<int>(p)) {
        throw ValidationError("line '" + line.id + "': page ordinal mismatch");
      }
      require_bbox(line.bbox, "line '" + line.id + "'");
      if (line.bbox.w <= 0.0 || line.bbox.h <= 0.0) {
        throw ValidationError("line '" + line.id + "': degenerate bbox");
      }
      if (line.word_start != next_word || line.word_end < line.word_start) {
        throw ValidationError("line '" + line.id +
                              "': word range breaks reading-order coverage");
      }
      if (line.word_end >= doc.word_count()) {
        throw ValidationError("line '" + line.id +
                              "': word range exceeds word list");
      }
      for (int k = line.word_start; k <= line.word_end; ++k) {
        const Word& w = doc.words[k];
        if (w.index != k) {
          throw ValidationError("line '" + line.id + "': word index " +
                                std::to_string(w.index) + " out of order");
        }
        if (w.text.empty()) {
          throw ValidationError("line '" + line.id + "': empty word text");
        }
        require_bbox(w.bbox, "word " + std::to_string(k));
        if (w.bbox.w <= 0.0 || w.bbox.h <= 0.0) {
          throw ValidationError("line '" + line.id + "': word " +
                                std::to_string(k) + " has a degenerate bbox");
        }
        if (!line_contains(line.bbox, w.bbox)) {
          throw ValidationError("line '" + line.id + "': word " +
                                std::to_string(k) + " outside its line");
        }
      }
      next_word = line.word_end + 1;
    }
  }
  if (next_word != doc.word_count()) {
    throw ValidationError("doc '" + doc.doc_id + "': " +
                          std::to_string(doc.word_count() - next_word) +
                          " words belong to no line");
  }
  std::set<std::string> ids;
  for (const Page& page : doc.pages) {
    for (const Line& line : page.lines) {
      if (!ids.insert(line.id).second) {
        throw ValidationError("duplicate line id '" + line.id + "'");
      }
    }
  }
}

Document parse_document(std::string_view ocr_json) {
  json j = parse_json_or_throw(ocr_json, "OCR input");
  if (!j.is_object() || !j.contains("doc_id") || !j.contains("pages")) {
    throw FormatError("OCR input: expected {doc_id, pages}");
  }
  Document doc;
  try {
    doc.doc_id = j.at("doc_id").get<std::string>();
    int word_index = 0;
    int page_no = 0;
    for (const auto& jp : j.at("pages")) {
      Page page;
      page.width_px = jp.at("width_px").get<int>();
      page.height_px = jp.at("height_px").get<int>();
      for (const auto& jl : jp.at("lines")) {
        Line line;
        line.id = jl.at("id").get<std::string>();
        line.bbox = bbox_from_json(jl.at("bbox"), "line '" + line.id + "'");
        line.page = page_no;
        line.word_start = word_index;
        for (const auto& jw : jl.at("words")) {
          Word w;
          w.text = jw.at("text").get<std::string>();
          w.bbox = bbox_from_json(jw.at("bbox"), "word in line '" + line.id + "'");
          w.index = word_index++;
          doc.words.push_back(std::move(w));
        }
        if (word_index == line.word_start) {
          throw ValidationError("line '" + line.id + "': no words");
        }
        line.word_end = word_index - 1;
        page.lines.push_back(std::move(line));
      }
      doc.pages.push_back(std::move(page));
      ++page_no;
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("OCR input: ") + e.what());
  }
  validate_document(doc);
  return doc;
}

std::string serialize_document(const Document& doc) {
  json jpages = json::array();
  for (const Page& page : doc.pages) {
    json jlines = json::array();
    for (const Line& line : page.lines) {
      json jwords = json::array();
      for (int k = line.word_start; k <= line.word_end; ++k) {
        jwords.push_back(json{{"text", doc.words[k].text},
                              {"bbox", bbox_to_json(doc.words[k].bbox)}});
      }
      jlines.push_back(json{{"id", line.id},
                            {"bbox", bbox_to_json(line.bbox)},
                            {"words", std::move(jwords)}});
    }
    jpages.push_back(json{{"width_px", page.width_px},
                          {"height_px", page.height_px},
                          {"lines", std::move(jlines)}});
  }
  json out{{"doc_id", doc.doc_id}, {"pages", std::move(jpages)}};
  return out.dump(2) + "\n";
}

const Line& line_of(const Document& doc, int word_index) {
  if (word_index < 0 || word_index >= doc.word_count()) {
    throw std::out_of_range("word index " + std::to_string(word_index) +
                            " outside [0, " + std::to_string(doc.word_count()) +
                            ")");
  }
  // Word ranges ascend page by page, so a per-page binary search suffices.
  for (const Page& page : doc.pages) {
    if (page.lines.empty() || word_index > page.lines.back().word_end) continue;
    int lo = 0;
    int hi = static_cast<int>(page.lines.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (page.lines[mid].word_end < word_index) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return page.lines[lo];
  }
  throw std::out_of_range("word index " + std::to_string(word_index) +
                          " belongs to no line");
}

std::string line_text(const Document& doc, const Line& line) {
  std::string out;
  for (int k = line.word_start; k <= line.word_end; ++k) {
    if (!out.empty()) out += ' ';
    out += doc.words[k].text;
  }
  return out;
}

std::vector<InexactLabel> parse_inexact_labels(std::string_view text) {
  json j = parse_json_or_throw(text, "inexact labels");
  std::vector<InexactLabel> out;
  if (j.is_array()) {
    for (const auto& je : j) out.push_back(inexact_label_from_json(je));
  } else {
    out.push_back(inexact_label_from_json(j));
  }
  return out;
}

std::string serialize_inexact_labels(const std::vector<InexactLabel>& labels) {
  json out = json::array();
  for (const InexactLabel& label : labels) {
    json jents = json::array();
    for (const LabeledEntity& e : label.entities) {
      jents.push_back(json{{"type", e.type}, {"text", e.text}});
    }
    out.push_back(json{{"doc_id", label.doc_id}, {"entities", std::move(jents)}});
  }
  return out.dump(2) + "\n";
}

std::vector<DocEntities> parse_entities_file(std::string_view text) {
  json j = parse_json_or_throw(text, "entity file");
  if (!j.is_array()) {
    throw FormatError("entity file: expected an array of documents");
  }
  std::vector<DocEntities> out;
  for (const auto& jd : j) {
    DocEntities d;
    d.doc_id = jd.at("doc_id").get<std::string>();
    for (const auto& je : jd.at("entities")) {
      EntityRecord r;
      r.type = je.at("type").get<std::string>();
      r.text = je.at("text").get<std::string>();
      for (const auto& t : je.at("token_indices")) {
        r.token_indices.push_back(t.get<int>());
      }
      d.entities.push_back(std::move(r));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string serialize_entities_file(const std::vector<DocEntities>& docs) {
  json out = json::array();
  for (const DocEntities& d : docs) {
    json jents = json::array();
    for (const EntityRecord& r : d.entities) {
      jents.push_back(json{{"type", r.type},
                           {"text", r.text},
                           {"token_indices", r.token_indices}});
    }
    out.push_back(json{{"doc_id", d.doc_id}, {"entities", std::move(jents)}});
  }
  return out.dump(2) + "\n";
}

DocEntities materialize_entities(const Document& doc,
                                 const std::vector<NamedEntity>& entities) {
  DocEntities out;
  out.doc_id = doc.doc_id;
  for (const NamedEntity& e : entities) {
    EntityRecord r;
    r.type = e.type;
    r.token_indices = e.tokens;
    for (size_t i = 0; i < e.tokens.size(); ++i) {
      if (i) r.text += ' ';
      r.text += doc.words.at(e.tokens[i]).text;
    }
    out.entities.push_back(std::move(r));
  }
  return out;
}

}  // namespace paralabel
