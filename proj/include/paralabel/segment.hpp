// paralabel/segment.hpp
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
// Morphology-style paragraph segmentation: iteratively dilate line boxes,
// merge the ones that overlap or touch, re-tighten each merged region to
// the contour of its member lines, and halt on patience or on the
// aggregation ratio.

#pragma once

#include <string>
#include <vector>

#include "paralabel/document.hpp"

namespace paralabel {

struct SegConfig {
  int kernel_w = 2;   // pixels added per horizontal side, per iteration
  int kernel_h = 2;   // pixels added per vertical side, per iteration
  int patience = 3;   // consecutive merge-free iterations before halting
  double min_aggregation_ratio = 0.5;  // halt once count/initial falls to this
  int max_iterations = 50;
};

// Throws ValidationError on out-of-range fields.
void validate(const SegConfig& cfg);

struct ParagraphRoi {
  BBox bbox;                         // tight bbox of member lines
  std::vector<std::string> members;  // line ids, kept sorted
  int page = 0;
};

enum class HaltReason { kPatience, kAggregationRatio, kIterationCap };

const char* halt_reason_name(HaltReason reason);
HaltReason halt_reason_from_name(const std::string& name);

struct SegResult {
  std::vector<ParagraphRoi> rois;
  HaltReason halt = HaltReason::kPatience;
  int iterations = 0;
};

// Kernel growth in pixels converted to fractions of the page, clamped to
// the unit square. Dilation feeds only the overlap test; contours stay
// tight, so growth never compounds across iterations.
BBox dilate(const BBox& bbox, int kernel_w, int kernel_h, int page_w,
            int page_h);

// One iteration: replace every connected component of the "dilated boxes
// overlap or touch" relation with a single RoI (member union, tight bbox
// join). Returns the new list and the number of merges (count in - count
// out). Output order is canonical: (y, x, first member id).
std::pair<std::vector<ParagraphRoi>, int> merge_step(
    const std::vector<ParagraphRoi>& rois, const SegConfig& cfg, int page_w,
    int page_h);

// Full loop from one RoI per line. Halts when no merge occurred in the
// last `patience` iterations, when the RoI count first reaches
// min_aggregation_ratio * initial count, or at max_iterations.
SegResult segment(const std::vector<Line>& lines, const SegConfig& cfg,
                  int page_w, int page_h);

// RoI file format: one record per document,
// {"doc_id", "pages": [{"page", "iterations", "halt_reason", "rois": [...]}]}.
struct DocRois {
  std::string doc_id;
  std::vector<SegResult> pages;  // indexed by page ordinal
};

std::string serialize_rois(const DocRois& rois);
DocRois parse_rois(std::string_view text);

}  // namespace paralabel
