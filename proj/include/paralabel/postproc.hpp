// paralabel/postproc.hpp
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
// Rule-based post-processing of detected paragraph objects: bind boxes
// back to OCR lines, classify (major / designation), split the page into
// columns on the x axis, sort column-major, merge minors into majors with
// designation closing, and emit one named entity per group.

#pragma once

#include <string>
#include <vector>

#include "paralabel/document.hpp"
#include "paralabel/pseudo.hpp"

namespace paralabel {

struct DetectedObject {
  BBox bbox;  // normalized
  std::string category;
  double confidence = 1.0;
  std::vector<std::string> member_lines;  // document line order
  bool is_major = false;
  bool is_designation = false;
  int column_index = -1;
  int page = 0;
};

struct EntityGroup {
  std::vector<DetectedObject> objects;  // column-major order
  bool closed = false;
};

// Lines of the page whose intersection with the box covers at least half
// of the line's own area, in document line order.
std::vector<std::string> attach_lines(const Document& doc, int page,
                                      const BBox& box);

// Member line texts joined with single spaces, document line order.
std::string object_text(const Document& doc, const DetectedObject& obj);

// Sets is_major (strictly more than five lines) and is_designation (the
// object text contains the standalone word "for").
void classify(DetectedObject& obj, const Document& doc);

// Columns are connected components of the "x-intervals overlap or touch"
// relation, numbered left to right by minimum x. All objects must share
// one page.
void x_cut(std::vector<DetectedObject>& objects);

// Sort key: column_index, then bbox.y, then bbox.x.
void column_major_sort(std::vector<DetectedObject>& objects);

// Merges each minor into the vertically nearest open major of its column
// (edge gap; 0 when y-ranges overlap, x-gap breaks ties, then the major
// above). A major is closed when it is a designation object or absorbs a
// designation minor, in scan order. Minors with no open major become
// singleton groups. Groups and their members follow column-major order.
std::vector<EntityGroup> group_objects(
    const std::vector<DetectedObject>& sorted_objects);

// One entity per group: objects in group order, lines within an object in
// document line order, words within a line in reading order. A word
// claimed by an earlier group is dropped from later ones; a group whose
// words were all claimed emits nothing.
std::vector<NamedEntity> emit_entities(const std::vector<EntityGroup>& groups,
                                       const Document& doc,
                                       const std::string& category);

struct PostprocOptions {
  double confidence_threshold = 0.5;  // keep score >= threshold
  std::string category = "attorney_profile";
  bool drop_pro_se = false;  // drop objects whose text contains "pro se"
};

// Builds page-grouped DetectedObjects for one document from COCO
// detections: confidence filter, overlap suppression, line attachment,
// classification, and the optional pro-se rule.
std::vector<std::vector<DetectedObject>> ingest_detections(
    const CocoDataset& coco, const Document& doc, const PostprocOptions& opt);

// Full chain for one document: per page, x_cut + sort + group + emit.
std::vector<NamedEntity> postprocess_document(
    const Document& doc, const std::vector<std::vector<DetectedObject>>& pages,
    const PostprocOptions& opt);

}  // namespace paralabel
