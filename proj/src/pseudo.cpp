// src/pseudo.cpp
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

#include "paralabel/pseudo.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "paralabel/errors.hpp"

namespace paralabel {

using nlohmann::json;

std::vector<ParagraphRoi> select_rois(const std::vector<ParagraphRoi>& rois,
                                      const std::set<std::string>& active,
                                      int phi) {
  std::vector<ParagraphRoi> out;
  for (const ParagraphRoi& roi : rois) {
    int hits = 0;
    for (const std::string& id : roi.members) {
      if (active.count(id)) ++hits;
    }
    if (hits > phi) out.push_back(roi);
  }
  return out;
}

std::vector<std::pair<BBox, std::string>> suppress_overlaps(
    const std::vector<std::pair<BBox, std::string>>& boxes) {
  const int n = static_cast<int>(boxes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (intersection_area(boxes[i].first, boxes[j].first) > 0.0) {
        int a = find(i);
        int b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  // Component-wide largest area survives; ties keep the earliest index.
  std::vector<int> winner(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (winner[root] < 0 ||
        area(boxes[i].first) > area(boxes[winner[root]].first)) {
      winner[root] = i;
    }
  }
  std::vector<std::pair<BBox, std::string>> out;
  for (int i = 0; i < n; ++i) {
    if (winner[find(i)] == i) out.push_back(boxes[i]);
  }
  return out;
}

PseudoLabelSet emit_pseudo(const Document& doc, int page,
                           const std::vector<ParagraphRoi>& selected,
                           const std::string& category) {
  if (page < 0 || page >= static_cast<int>(doc.pages.size())) {
    throw ValidationError("emit_pseudo: page " + std::to_string(page) +
                          " out of range for doc '" + doc.doc_id + "'");
  }
  std::vector<std::pair<BBox, std::string>> boxes;
  for (const ParagraphRoi& roi : selected) {
    if (roi.page != page) {
      throw ValidationError("emit_pseudo: RoI on page " +
                            std::to_string(roi.page) + ", expected " +
                            std::to_string(page));
    }
    boxes.emplace_back(roi.bbox, category);
  }
  boxes = suppress_overlaps(boxes);

  const Page& p = doc.pages[page];
  PseudoLabelSet out;
  out.doc_id = doc.doc_id;
  out.page = page;
  for (const auto& [bbox, cat] : boxes) {
    PseudoBox box;
    box.bbox = PixelBox{bbox.x * p.width_px, bbox.y * p.height_px,
                        bbox.w * p.width_px, bbox.h * p.height_px};
    box.category = cat;
    out.boxes.push_back(std::move(box));
  }
  return out;
}

CocoDataset coco_from_pseudo(const std::vector<PseudoLabelSet>& sets,
                             const std::vector<const Document*>& docs,
                             const std::string& category) {
  CocoDataset ds;
  ds.categories.emplace_back(1, category);

  std::vector<const PseudoLabelSet*> ordered;
  for (const PseudoLabelSet& s : sets) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const PseudoLabelSet* a, const PseudoLabelSet* b) {
                     if (a->doc_id != b->doc_id) return a->doc_id < b->doc_id;
                     return a->page < b->page;
                   });

  auto page_dims = [&docs](const std::string& doc_id, int page) {
    for (const Document* d : docs) {
      if (d->doc_id == doc_id) {
        const Page& p = d->pages.at(page);
        return std::pair<int, int>{p.width_px, p.height_px};
      }
    }
    throw ValidationError("COCO export: unknown doc '" + doc_id + "'");
  };

  int next_image = 1;
  int next_ann = 1;
  for (const PseudoLabelSet* s : ordered) {
    auto [w, h] = page_dims(s->doc_id, s->page);
    CocoImage img;
    img.id = next_image++;
    img.file_name = s->doc_id + ".p" + std::to_string(s->page) + ".png";
    img.width = w;
    img.height = h;
    ds.images.push_back(img);
    for (const PseudoBox& box : s->boxes) {
      CocoAnnotation ann;
      ann.id = next_ann++;
      ann.image_id = img.id;
      ann.category_id = 1;
      ann.bbox = box.bbox;
      ds.annotations.push_back(ann);
    }
  }
  return ds;
}

std::string serialize_coco(const CocoDataset& ds) {
  json jimages = json::array();
  for (const CocoImage& img : ds.images) {
    jimages.push_back(json{{"id", img.id},
                           {"file_name", img.file_name},
                           {"width", img.width},
                           {"height", img.height}});
  }
  json janns = json::array();
  for (const CocoAnnotation& ann : ds.annotations) {
    json j{{"id", ann.id},
           {"image_id", ann.image_id},
           {"category_id", ann.category_id},
           {"bbox", {ann.bbox.x, ann.bbox.y, ann.bbox.w, ann.bbox.h}},
           {"iscrowd", 0}};
    if (ann.has_score) j["score"] = ann.score;
    janns.push_back(std::move(j));
  }
  json jcats = json::array();
  for (const auto& [id, name] : ds.categories) {
    jcats.push_back(json{{"id", id}, {"name", name}});
  }
  json out{{"images", std::move(jimages)},
           {"annotations", std::move(janns)},
           {"categories", std::move(jcats)}};
  return out.dump(2) + "\n";
}

CocoDataset parse_coco(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("COCO: malformed JSON at byte " + std::to_string(e.byte));
  }
  CocoDataset ds;
  try {
    for (const auto& ji : j.at("images")) {
      CocoImage img;
      img.id = ji.at("id").get<int>();
      img.file_name = ji.at("file_name").get<std::string>();
      img.width = ji.at("width").get<int>();
      img.height = ji.at("height").get<int>();
      ds.images.push_back(std::move(img));
    }
    for (const auto& ja : j.at("annotations")) {
      CocoAnnotation ann;
      ann.id = ja.at("id").get<int>();
      ann.image_id = ja.at("image_id").get<int>();
      ann.category_id = ja.at("category_id").get<int>();
      const auto& b = ja.at("bbox");
      if (!b.is_array() || b.size() != 4) {
        throw FormatError("COCO: annotation " + std::to_string(ann.id) +
                          " bbox must be [x, y, w, h]");
      }
      ann.bbox = PixelBox{b[0].get<double>(), b[1].get<double>(),
                          b[2].get<double>(), b[3].get<double>()};
      if (ja.contains("score")) {
        ann.score = ja.at("score").get<double>();
        ann.has_score = true;
      }
      ds.annotations.push_back(std::move(ann));
    }
    for (const auto& jc : j.at("categories")) {
      ds.categories.emplace_back(jc.at("id").get<int>(),
                                 jc.at("name").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("COCO: ") + e.what());
  }
  return ds;
}

std::pair<std::string, int> split_coco_file_name(const std::string& file_name) {
  size_t dot_png = file_name.rfind(".png");
  if (dot_png == std::string::npos || dot_png + 4 != file_name.size()) {
    throw FormatError("COCO file_name '" + file_name + "': expected .png");
  }
  size_t dot_p = file_name.rfind(".p", dot_png - 1);
  if (dot_p == std::string::npos || dot_p + 2 >= dot_png) {
    throw FormatError("COCO file_name '" + file_name +
                      "': expected '<doc_id>.p<page>.png'");
  }
  std::string doc_id = file_name.substr(0, dot_p);
  int page = 0;
  for (size_t i = dot_p + 2; i < dot_png; ++i) {
    char c = file_name[i];
    if (c < '0' || c > '9') {
      throw FormatError("COCO file_name '" + file_name +
                        "': non-numeric page ordinal");
    }
    page = page * 10 + (c - '0');
  }
  return {doc_id, page};
}

}  // namespace paralabel
