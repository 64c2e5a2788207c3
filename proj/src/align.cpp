// src/align.cpp
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

#include "paralabel/align.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>

#include "json.hpp"
#include "paralabel/errors.hpp"
#include "paralabel/strings.hpp"

namespace paralabel {

namespace {

constexpr char kMagic[] = "ATTN1\n";
constexpr size_t kMagicLen = 6;
constexpr double kColumnSumTol = 1e-3;

void put_u32le(std::string& out, uint32_t v) {
  out += static_cast<char>(v & 0xff);
  out += static_cast<char>((v >> 8) & 0xff);
  out += static_cast<char>((v >> 16) & 0xff);
  out += static_cast<char>((v >> 24) & 0xff);
}

uint32_t get_u32le(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

float get_f32le(const unsigned char* p) {
  uint32_t bits = get_u32le(p);
  float f;
  std::memcpy(&f, &bits, sizeof f);
  return f;
}

void put_f32le(std::string& out, float f) {
  uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  put_u32le(out, bits);
}

AttentionMatrix parse_binary(std::string_view bytes) {
  if (bytes.size() < kMagicLen + 8) {
    throw FormatError("ATTN: truncated header");
  }
  const unsigned char* p =
      reinterpret_cast<const unsigned char*>(bytes.data()) + kMagicLen;
  AttentionMatrix m;
  m.rows = static_cast<int>(get_u32le(p));
  m.cols = static_cast<int>(get_u32le(p + 4));
  size_t expected = kMagicLen + 8 +
                    static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols) * 4;
  if (bytes.size() != expected) {
    throw FormatError("ATTN: payload size " + std::to_string(bytes.size()) +
                      " does not match " + std::to_string(m.rows) + "x" +
                      std::to_string(m.cols));
  }
  m.data.resize(static_cast<size_t>(m.rows) * m.cols);
  p += 8;
  for (size_t i = 0; i < m.data.size(); ++i, p += 4) {
    m.data[i] = get_f32le(p);
  }
  return m;
}

AttentionMatrix parse_json_form(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("ATTN JSON: malformed at byte ") +
                      std::to_string(e.byte));
  }
  AttentionMatrix m;
  try {
    m.rows = j.at("rows").get<int>();
    m.cols = j.at("cols").get<int>();
    for (const auto& v : j.at("data")) {
      m.data.push_back(v.get<float>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ATTN JSON: ") + e.what());
  }
  if (m.rows < 0 || m.cols < 0 ||
      m.data.size() != static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols)) {
    throw FormatError("ATTN JSON: data length does not match rows*cols");
  }
  return m;
}

}  // namespace

void validate_attention(const AttentionMatrix& m) {
  if (m.rows < 0 || m.cols < 0 ||
      m.data.size() != static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols)) {
    throw FormatError("ATTN: data length does not match rows*cols");
  }
  for (size_t i = 0; i < m.data.size(); ++i) {
    if (!(m.data[i] >= 0.0f) || !std::isfinite(m.data[i])) {
      throw FormatError("ATTN: negative or non-finite score at entry " +
                        std::to_string(i));
    }
  }
  for (int c = 0; c < m.cols; ++c) {
    double sum = 0.0;
    for (int r = 0; r < m.rows; ++r) sum += m.at(r, c);
    if (sum != 0.0 && std::abs(sum - 1.0) > kColumnSumTol) {
      throw FormatError("ATTN: column " + std::to_string(c) + " sums to " +
                        std::to_string(sum) + ", expected 1 or exactly 0");
    }
  }
}

AttentionMatrix load_attention(std::string_view bytes, int expected_rows) {
  AttentionMatrix m;
  if (bytes.size() >= kMagicLen &&
      std::memcmp(bytes.data(), kMagic, kMagicLen) == 0) {
    m = parse_binary(bytes);
  } else {
    size_t i = 0;
    while (i < bytes.size() &&
           std::isspace(static_cast<unsigned char>(bytes[i]))) {
      ++i;
    }
    if (i < bytes.size() && bytes[i] == '{') {
      m = parse_json_form(bytes);
    } else {
      throw FormatError("ATTN: bad magic (expected 'ATTN1' or JSON object)");
    }
  }
  validate_attention(m);
  if (expected_rows >= 0 && m.rows != expected_rows) {
    throw FormatError("ATTN: rows " + std::to_string(m.rows) +
                      " but the document has " + std::to_string(expected_rows) +
                      " words");
  }
  return m;
}

std::string save_attention_binary(const AttentionMatrix& m) {
  std::string out(kMagic, kMagicLen);
  put_u32le(out, static_cast<uint32_t>(m.rows));
  put_u32le(out, static_cast<uint32_t>(m.cols));
  for (float f : m.data) put_f32le(out, f);
  return out;
}

std::string save_attention_json(const AttentionMatrix& m) {
  nlohmann::json out{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
  return out.dump(2) + "\n";
}

AttentionMatrix align_tokens(const Document& doc, std::string_view label_text,
                             double sim_threshold) {
  std::vector<std::string> tokens = tokenize_whitespace(label_text);
  AttentionMatrix m;
  m.rows = doc.word_count();
  m.cols = static_cast<int>(tokens.size());
  m.data.assign(static_cast<size_t>(m.rows) * m.cols, 0.0f);

  // Normalized word texts are reused across tokens.
  std::vector<std::string> norm_words(doc.words.size());
  for (size_t i = 0; i < doc.words.size(); ++i) {
    norm_words[i] = normalize_token(doc.words[i].text);
  }

  int prev = 0;
  for (int c = 0; c < m.cols; ++c) {
    const std::string norm_tok = normalize_token(tokens[c]);
    int best = -1;
    int best_dist = -1;
    for (int i = 0; i < m.rows; ++i) {
      double sim;
      if (norm_words[i] == norm_tok) {
        sim = 1.0;
      } else {
        size_t longest = std::max(norm_words[i].size(), norm_tok.size());
        sim = longest == 0 ? 1.0
                           : 1.0 - static_cast<double>(levenshtein_bytes(
                                       norm_words[i], norm_tok)) /
                                       static_cast<double>(longest);
      }
      if (sim < sim_threshold) continue;
      int dist = std::abs(i - prev);
      if (best < 0 || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
      // Equal distance keeps the earlier (smaller) index, which the
      // ascending scan already guarantees.
    }
    if (best >= 0) {
      m.at(best, c) = 1.0f;
      prev = best;
    }
  }
  return m;
}

AttentionMatrix concat_columns(const std::vector<AttentionMatrix>& parts) {
  AttentionMatrix out;
  if (parts.empty()) return out;
  out.rows = parts[0].rows;
  for (const AttentionMatrix& p : parts) {
    if (p.rows != out.rows) {
      throw ValidationError("attention concat: row counts differ");
    }
    out.cols += p.cols;
  }
  out.data.assign(static_cast<size_t>(out.rows) * out.cols, 0.0f);
  int offset = 0;
  for (const AttentionMatrix& p : parts) {
    for (int r = 0; r < p.rows; ++r) {
      for (int c = 0; c < p.cols; ++c) {
        out.at(r, offset + c) = p.at(r, c);
      }
    }
    offset += p.cols;
  }
  return out;
}

std::vector<LineScore> line_scores(const AttentionMatrix& m,
                                   const Document& doc) {
  if (m.rows != doc.word_count()) {
    throw ValidationError("attention rows " + std::to_string(m.rows) +
                          " != document word count " +
                          std::to_string(doc.word_count()));
  }
  // Per-row totals first; lines then sum contiguous row ranges.
  std::vector<double> row_mass(static_cast<size_t>(m.rows), 0.0);
  for (int r = 0; r < m.rows; ++r) {
    double s = 0.0;
    for (int c = 0; c < m.cols; ++c) s += m.at(r, c);
    row_mass[r] = s;
  }
  std::vector<LineScore> out;
  for (const Page& page : doc.pages) {
    for (const Line& line : page.lines) {
      LineScore score;
      score.line_id = line.id;
      score.n_words = line.word_count();
      for (int k = line.word_start; k <= line.word_end; ++k) {
        score.mass += row_mass[k];
      }
      score.normalized = score.mass / score.n_words;
      out.push_back(std::move(score));
    }
  }
  return out;
}

std::set<std::string> active_lines(const std::vector<LineScore>& scores,
                                   double psi) {
  std::set<std::string> out;
  for (const LineScore& s : scores) {
    if (s.normalized > psi) out.insert(s.line_id);
  }
  return out;
}

std::set<std::string> active_lines_per_step(const AttentionMatrix& m,
                                            const Document& doc, double psi) {
  if (m.rows != doc.word_count()) {
    throw ValidationError("attention rows " + std::to_string(m.rows) +
                          " != document word count " +
                          std::to_string(doc.word_count()));
  }
  std::set<std::string> out;
  for (const Page& page : doc.pages) {
    for (const Line& line : page.lines) {
      for (int c = 0; c < m.cols; ++c) {
        double mass = 0.0;
        for (int k = line.word_start; k <= line.word_end; ++k) {
          mass += m.at(k, c);
        }
        if (mass / line.word_count() > psi) {
          out.insert(line.id);
          break;
        }
      }
    }
  }
  return out;
}

ActivationMode activation_mode_from_name(const std::string& name) {
  if (name == "sum") return ActivationMode::kSum;
  if (name == "any") return ActivationMode::kAny;
  throw ValidationError("unknown activation_mode '" + name +
                        "' (expected 'sum' or 'any')");
}

const char* activation_mode_name(ActivationMode mode) {
  return mode == ActivationMode::kSum ? "sum" : "any";
}

std::set<std::string> active_lines(const AttentionMatrix& m,
                                   const Document& doc, double psi,
                                   ActivationMode mode) {
  if (mode == ActivationMode::kAny) {
    return active_lines_per_step(m, doc, psi);
  }
  return active_lines(line_scores(m, doc), psi);
}

}  // namespace paralabel
