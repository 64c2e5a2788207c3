// paralabel/pseudo.hpp
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
// RoI selection and pseudo-label emission: keep paragraph RoIs with
// enough active lines, suppress overlapping boxes, convert to pixel
// space, and exchange the result as COCO-style detection JSON.

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paralabel/document.hpp"
#include "paralabel/segment.hpp"

namespace paralabel {

// RoIs whose member set contains strictly more than phi active lines.
std::vector<ParagraphRoi> select_rois(const std::vector<ParagraphRoi>& rois,
                                      const std::set<std::string>& active,
                                      int phi);

// Within each connected component of pairwise-overlapping boxes (open
// overlap; edge contact does not count), only the largest-area box
// survives; area ties keep the earliest input index. Output preserves
// input order.
std::vector<std::pair<BBox, std::string>> suppress_overlaps(
    const std::vector<std::pair<BBox, std::string>>& boxes);

struct PixelBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
};

struct PseudoBox {
  PixelBox bbox;
  std::string category;
  // Pseudo boxes are labels, not predictions; the field exists so
  // ingested detector output shares the type.
  double confidence = 1.0;
};

struct PseudoLabelSet {
  std::string doc_id;
  int page = 0;
  std::vector<PseudoBox> boxes;
};

// Applies suppress_overlaps in normalized space, then converts to pixel
// coordinates of the given page.
PseudoLabelSet emit_pseudo(const Document& doc, int page,
                           const std::vector<ParagraphRoi>& selected,
                           const std::string& category);

// COCO-style interchange. Image ids are assigned in (doc_id, page) order;
// file_name is "<doc_id>.p<page>.png". Annotations omit `score` when the
// boxes are labels; ingested predictions may carry one.
struct CocoAnnotation {
  int id = 0;
  int image_id = 0;
  int category_id = 0;
  PixelBox bbox;
  double score = 1.0;
  bool has_score = false;
};

struct CocoImage {
  int id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
};

struct CocoDataset {
  std::vector<CocoImage> images;
  std::vector<CocoAnnotation> annotations;
  std::vector<std::pair<int, std::string>> categories;  // (id, name)
};

CocoDataset coco_from_pseudo(const std::vector<PseudoLabelSet>& sets,
                             const std::vector<const Document*>& docs,
                             const std::string& category);

std::string serialize_coco(const CocoDataset& ds);
CocoDataset parse_coco(std::string_view text);

// Splits "<doc_id>.p<page>.png" back into its parts.
std::pair<std::string, int> split_coco_file_name(const std::string& file_name);

}  // namespace paralabel
