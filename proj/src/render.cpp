// src/render.cpp
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

#include "paralabel/render.hpp"

#include <cstdio>

#include "paralabel/errors.hpp"

namespace paralabel {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void append_rect(std::string& out, double x, double y, double w, double h,
                 const std::string& stroke, int stroke_width) {
  out += "  <rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" +
         fmt(w) + "\" height=\"" + fmt(h) + "\" fill=\"none\" stroke=\"" +
         stroke + "\" stroke-width=\"" + std::to_string(stroke_width) +
         "\"/>\n";
}

}  // namespace

std::string render_page_svg(const Document& doc, int page,
                            const std::vector<OverlayLayer>& layers) {
  if (page < 0 || page >= static_cast<int>(doc.pages.size())) {
    throw ValidationError("render: page " + std::to_string(page) +
                          " out of range for document " + doc.doc_id);
  }
  const Page& pg = doc.pages[page];
  const double w = pg.width_px;
  const double h = pg.height_px;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(pg.width_px) + "\" height=\"" +
         std::to_string(pg.height_px) + "\" viewBox=\"0 0 " +
         std::to_string(pg.width_px) + " " + std::to_string(pg.height_px) +
         "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (const Line& line : pg.lines) {
    for (int i = line.word_start; i <= line.word_end; ++i) {
      const BBox& b = doc.words[i].bbox;
      append_rect(out, b.x * w, b.y * h, b.w * w, b.h * h, "#cccccc", 1);
    }
  }
  for (const OverlayLayer& layer : layers) {
    for (const OverlayBox& box : layer.boxes) {
      if (box.page != page) continue;
      const BBox& b = box.bbox;
      append_rect(out, b.x * w, b.y * h, b.w * w, b.h * h, layer.color, 2);
    }
  }
  for (size_t i = 0; i < layers.size(); ++i) {
    const double y = 8.0 + 18.0 * static_cast<double>(i);
    out += "  <rect x=\"8\" y=\"" + fmt(y) +
           "\" width=\"12\" height=\"12\" fill=\"" + layers[i].color +
           "\"/>\n";
    out += "  <text x=\"24\" y=\"" + fmt(y + 10.0) +
           "\" font-family=\"monospace\" font-size=\"12\">" +
           escape_xml(layers[i].name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace paralabel
