// src/segment.cpp
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

#include "paralabel/segment.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "paralabel/errors.hpp"

namespace paralabel {

using nlohmann::json;

void validate(const SegConfig& cfg) {
  if (cfg.kernel_w < 1 || cfg.kernel_h < 1) {
    throw ValidationError("segmenter kernel must be at least 1x1 px");
  }
  if (cfg.patience < 1) {
    throw ValidationError("segmenter patience must be at least 1");
  }
  if (!(cfg.min_aggregation_ratio > 0.0) || cfg.min_aggregation_ratio > 1.0) {
    throw ValidationError("min_aggregation_ratio must be in (0, 1]");
  }
  if (cfg.max_iterations < 1) {
    throw ValidationError("max_iterations must be at least 1");
  }
}

const char* halt_reason_name(HaltReason reason) {
  switch (reason) {
    case HaltReason::kPatience:
      return "patience";
    case HaltReason::kAggregationRatio:
      return "aggregation_ratio";
    case HaltReason::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

HaltReason halt_reason_from_name(const std::string& name) {
  if (name == "patience") return HaltReason::kPatience;
  if (name == "aggregation_ratio") return HaltReason::kAggregationRatio;
  if (name == "iteration_cap") return HaltReason::kIterationCap;
  throw FormatError("unknown halt reason '" + name + "'");
}

BBox dilate(const BBox& bbox, int kernel_w, int kernel_h, int page_w,
            int page_h) {
  return dilate(bbox, static_cast<double>(kernel_w) / page_w,
                static_cast<double>(kernel_h) / page_h);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void sort_canonical(std::vector<ParagraphRoi>& rois) {
  std::sort(rois.begin(), rois.end(),
            [](const ParagraphRoi& a, const ParagraphRoi& b) {
              if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
              if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
              return a.members < b.members;
            });
}

}  // namespace

std::pair<std::vector<ParagraphRoi>, int> merge_step(
    const std::vector<ParagraphRoi>& rois, const SegConfig& cfg, int page_w,
    int page_h) {
  const int n = static_cast<int>(rois.size());
  std::vector<BBox> grown(n);
  for (int i = 0; i < n; ++i) {
    grown[i] = dilate(rois[i].bbox, cfg.kernel_w, cfg.kernel_h, page_w, page_h);
  }
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (closed_overlap(grown[i], grown[j])) uf.unite(i, j);
    }
  }
  std::vector<int> root_slot(n, -1);
  std::vector<ParagraphRoi> merged;
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (root_slot[root] < 0) {
      root_slot[root] = static_cast<int>(merged.size());
      merged.push_back(rois[i]);
    } else {
      ParagraphRoi& dst = merged[root_slot[root]];
      dst.bbox = join(dst.bbox, rois[i].bbox);
      dst.members.insert(dst.members.end(), rois[i].members.begin(),
                         rois[i].members.end());
    }
  }
  for (ParagraphRoi& roi : merged) {
    std::sort(roi.members.begin(), roi.members.end());
  }
  sort_canonical(merged);
  return {std::move(merged), n - static_cast<int>(merged.size())};
}

SegResult segment(const std::vector<Line>& lines, const SegConfig& cfg,
                  int page_w, int page_h) {
  validate(cfg);
  SegResult result;
  const int initial = static_cast<int>(lines.size());
  result.rois.reserve(lines.size());
  for (const Line& line : lines) {
    result.rois.push_back(ParagraphRoi{line.bbox, {line.id}, line.page});
  }
  sort_canonical(result.rois);

  int idle = 0;
  while (true) {
    auto [merged, merges] = merge_step(result.rois, cfg, page_w, page_h);
    result.rois = std::move(merged);
    ++result.iterations;
    idle = merges == 0 ? idle + 1 : 0;
    if (initial > 0 && static_cast<double>(result.rois.size()) / initial <=
                           cfg.min_aggregation_ratio) {
      result.halt = HaltReason::kAggregationRatio;
      return result;
    }
    if (idle >= cfg.patience) {
      result.halt = HaltReason::kPatience;
      return result;
    }
    if (result.iterations >= cfg.max_iterations) {
      result.halt = HaltReason::kIterationCap;
      return result;
    }
  }
}

namespace {

json roi_to_json(const ParagraphRoi& roi) {
  return json{{"bbox",
               {{"x", roi.bbox.x},
                {"y", roi.bbox.y},
                {"w", roi.bbox.w},
                {"h", roi.bbox.h}}},
              {"members", roi.members}};
}

ParagraphRoi roi_from_json(const json& j, int page) {
  ParagraphRoi roi;
  const json& b = j.at("bbox");
  roi.bbox = BBox{b.at("x").get<double>(), b.at("y").get<double>(),
                  b.at("w").get<double>(), b.at("h").get<double>()};
  for (const auto& m : j.at("members")) {
    roi.members.push_back(m.get<std::string>());
  }
  roi.page = page;
  return roi;
}

}  // namespace

std::string serialize_rois(const DocRois& rois) {
  json jpages = json::array();
  for (size_t p = 0; p < rois.pages.size(); ++p) {
    const SegResult& r = rois.pages[p];
    json jrois = json::array();
    for (const ParagraphRoi& roi : r.rois) jrois.push_back(roi_to_json(roi));
    jpages.push_back(json{{"page", p},
                          {"iterations", r.iterations},
                          {"halt_reason", halt_reason_name(r.halt)},
                          {"rois", std::move(jrois)}});
  }
  json out{{"doc_id", rois.doc_id}, {"pages", std::move(jpages)}};
  return out.dump(2) + "\n";
}

DocRois parse_rois(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("RoI file: malformed JSON at byte ") +
                      std::to_string(e.byte));
  }
  DocRois out;
  try {
    out.doc_id = j.at("doc_id").get<std::string>();
    for (const auto& jp : j.at("pages")) {
      SegResult r;
      int page = jp.at("page").get<int>();
      r.iterations = jp.at("iterations").get<int>();
      r.halt = halt_reason_from_name(jp.at("halt_reason").get<std::string>());
      for (const auto& jr : jp.at("rois")) {
        r.rois.push_back(roi_from_json(jr, page));
      }
      out.pages.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("RoI file: ") + e.what());
  }
  return out;
}

}  // namespace paralabel
