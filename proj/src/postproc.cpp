// src/postproc.cpp
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

#include "paralabel/postproc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "paralabel/errors.hpp"
#include "paralabel/strings.hpp"

namespace paralabel {

std::vector<std::string> attach_lines(const Document& doc, int page,
                                      const BBox& box) {
  std::vector<std::string> out;
  if (page < 0 || page >= static_cast<int>(doc.pages.size())) return out;
  for (const Line& line : doc.pages[page].lines) {
    double own = area(line.bbox);
    if (own <= 0.0) continue;
    if (intersection_area(line.bbox, box) >= 0.5 * own) {
      out.push_back(line.id);
    }
  }
  return out;
}

namespace {

const Line& find_line(const Document& doc, int page, const std::string& id) {
  for (const Line& line : doc.pages.at(page).lines) {
    if (line.id == id) return line;
  }
  throw ValidationError("line '" + id + "' not on page " +
                        std::to_string(page) + " of doc '" + doc.doc_id + "'");
}

}  // namespace

std::string object_text(const Document& doc, const DetectedObject& obj) {
  std::string out;
  for (const std::string& id : obj.member_lines) {
    const Line& line = find_line(doc, obj.page, id);
    if (!out.empty()) out += ' ';
    out += line_text(doc, line);
  }
  return out;
}

void classify(DetectedObject& obj, const Document& doc) {
  obj.is_major = obj.member_lines.size() > 5;
  obj.is_designation = contains_standalone_word(object_text(doc, obj), "for");
}

void x_cut(std::vector<DetectedObject>& objects) {
  const int n = static_cast<int>(objects.size());
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
      const BBox& a = objects[i].bbox;
      const BBox& b = objects[j].bbox;
      if (a.x <= b.x + b.w && b.x <= a.x + a.w) {
        int ra = find(i);
        int rb = find(j);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  // Number components left to right by their minimum x.
  std::vector<int> roots;
  std::vector<double> min_x(n, 2.0);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (min_x[r] > 1.5) roots.push_back(r);
    min_x[r] = std::min(min_x[r], objects[i].bbox.x);
  }
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return min_x[a] < min_x[b]; });
  std::vector<int> column_of(n, -1);
  for (size_t c = 0; c < roots.size(); ++c) column_of[roots[c]] = static_cast<int>(c);
  for (int i = 0; i < n; ++i) objects[i].column_index = column_of[find(i)];
}

void column_major_sort(std::vector<DetectedObject>& objects) {
  std::stable_sort(objects.begin(), objects.end(),
                   [](const DetectedObject& a, const DetectedObject& b) {
                     if (a.column_index != b.column_index) {
                       return a.column_index < b.column_index;
                     }
                     if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
                     return a.bbox.x < b.bbox.x;
                   });
}

namespace {

double interval_gap(double a0, double a1, double b0, double b1) {
  double lo = std::max(a0, b0);
  double hi = std::min(a1, b1);
  return lo > hi ? lo - hi : 0.0;
}

double vertical_gap(const BBox& a, const BBox& b) {
  return interval_gap(a.y, a.y + a.h, b.y, b.y + b.h);
}

double horizontal_gap(const BBox& a, const BBox& b) {
  return interval_gap(a.x, a.x + a.w, b.x, b.x + b.w);
}

}  // namespace

std::vector<EntityGroup> group_objects(
    const std::vector<DetectedObject>& sorted_objects) {
  const int n = static_cast<int>(sorted_objects.size());
  struct GroupState {
    std::vector<int> members;  // positions in sorted_objects
    bool closed = false;
  };
  std::vector<GroupState> groups;
  std::vector<int> group_of_major(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!sorted_objects[i].is_major) continue;
    group_of_major[i] = static_cast<int>(groups.size());
    GroupState g;
    g.members.push_back(i);
    g.closed = sorted_objects[i].is_designation;  // pre-closed
    groups.push_back(std::move(g));
  }

  for (int i = 0; i < n; ++i) {
    const DetectedObject& minor = sorted_objects[i];
    if (minor.is_major) continue;
    int best = -1;
    double best_vgap = 0.0, best_hgap = 0.0;
    bool best_above = false;
    for (int j = 0; j < n; ++j) {
      if (group_of_major[j] < 0 || groups[group_of_major[j]].closed) continue;
      const DetectedObject& major = sorted_objects[j];
      if (major.column_index != minor.column_index) continue;
      double vgap = vertical_gap(major.bbox, minor.bbox);
      double hgap = horizontal_gap(major.bbox, minor.bbox);
      bool above = major.bbox.y < minor.bbox.y;
      bool better;
      if (best < 0) {
        better = true;
      } else if (vgap != best_vgap) {
        better = vgap < best_vgap;
      } else if (above != best_above) {
        better = above;  // ties go to the major above
      } else if (hgap != best_hgap) {
        better = hgap < best_hgap;
      } else {
        better = false;  // keep the earlier scan position
      }
      if (better) {
        best = j;
        best_vgap = vgap;
        best_hgap = hgap;
        best_above = above;
      }
    }
    if (best < 0) {
      GroupState g;
      g.members.push_back(i);
      groups.push_back(std::move(g));
    } else {
      GroupState& g = groups[group_of_major[best]];
      g.members.push_back(i);
      if (minor.is_designation) g.closed = true;
    }
  }

  // Members joined out of order when a minor precedes its major; restore
  // column-major order inside each group, then order groups by their
  // first member.
  for (GroupState& g : groups) std::sort(g.members.begin(), g.members.end());
  std::sort(groups.begin(), groups.end(),
            [](const GroupState& a, const GroupState& b) {
              return a.members.front() < b.members.front();
            });

  std::vector<EntityGroup> out;
  for (const GroupState& g : groups) {
    EntityGroup eg;
    eg.closed = g.closed;
    for (int idx : g.members) eg.objects.push_back(sorted_objects[idx]);
    out.push_back(std::move(eg));
  }
  return out;
}

std::vector<NamedEntity> emit_entities(const std::vector<EntityGroup>& groups,
                                       const Document& doc,
                                       const std::string& category) {
  std::vector<NamedEntity> out;
  std::set<int> claimed;
  for (const EntityGroup& group : groups) {
    NamedEntity entity;
    entity.type = category;
    for (const DetectedObject& obj : group.objects) {
      for (const std::string& id : obj.member_lines) {
        const Line& line = find_line(doc, obj.page, id);
        for (int k = line.word_start; k <= line.word_end; ++k) {
          if (claimed.insert(k).second) entity.tokens.push_back(k);
        }
      }
    }
    // A group fully claimed by earlier groups carries no tokens and is
    // not an entity.
    if (!entity.tokens.empty()) out.push_back(std::move(entity));
  }
  return out;
}

std::vector<std::vector<DetectedObject>> ingest_detections(
    const CocoDataset& coco, const Document& doc, const PostprocOptions& opt) {
  std::vector<std::vector<DetectedObject>> pages(doc.pages.size());

  for (const CocoImage& img : coco.images) {
    auto [doc_id, page] = split_coco_file_name(img.file_name);
    if (doc_id != doc.doc_id) continue;
    if (page < 0 || page >= static_cast<int>(doc.pages.size())) {
      throw ValidationError("detections reference page " +
                            std::to_string(page) + " missing from doc '" +
                            doc.doc_id + "'");
    }
    const Page& p = doc.pages[page];

    std::vector<std::pair<BBox, std::string>> boxes;
    std::vector<double> scores;
    for (const CocoAnnotation& ann : coco.annotations) {
      if (ann.image_id != img.id) continue;
      double score = ann.has_score ? ann.score : 1.0;
      if (score < opt.confidence_threshold) continue;
      BBox b{ann.bbox.x / p.width_px, ann.bbox.y / p.height_px,
             ann.bbox.w / p.width_px, ann.bbox.h / p.height_px};
      // External detectors may spill a fraction of a pixel past the edge.
      b.x = std::clamp(b.x, 0.0, 1.0);
      b.y = std::clamp(b.y, 0.0, 1.0);
      b.w = std::clamp(b.w, 0.0, 1.0 - b.x);
      b.h = std::clamp(b.h, 0.0, 1.0 - b.y);
      boxes.emplace_back(b, opt.category);
      scores.push_back(score);
    }
    std::vector<std::pair<BBox, std::string>> kept = suppress_overlaps(boxes);

    size_t next = 0;
    for (size_t i = 0; i < boxes.size(); ++i) {
      if (next >= kept.size() || !(boxes[i].first == kept[next].first)) continue;
      ++next;
      DetectedObject obj;
      obj.bbox = boxes[i].first;
      obj.category = opt.category;
      obj.confidence = scores[i];
      obj.page = page;
      obj.member_lines = attach_lines(doc, page, obj.bbox);
      classify(obj, doc);
      if (opt.drop_pro_se &&
          contains_standalone_word(object_text(doc, obj), "pro se")) {
        continue;
      }
      pages[page].push_back(std::move(obj));
    }
  }
  return pages;
}

std::vector<NamedEntity> postprocess_document(
    const Document& doc, const std::vector<std::vector<DetectedObject>>& pages,
    const PostprocOptions& opt) {
  std::vector<NamedEntity> out;
  for (const std::vector<DetectedObject>& page_objects : pages) {
    std::vector<DetectedObject> objects = page_objects;
    x_cut(objects);
    column_major_sort(objects);
    std::vector<EntityGroup> groups = group_objects(objects);
    std::vector<NamedEntity> entities = emit_entities(groups, doc, opt.category);
    out.insert(out.end(), entities.begin(), entities.end());
  }
  return out;
}

}  // namespace paralabel
