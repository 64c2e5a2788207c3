// src/geometry.cpp
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

#include "paralabel/geometry.hpp"

#include <cmath>

#include "paralabel/errors.hpp"

namespace paralabel {

bool bbox_ok(const BBox& b) {
  if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.w) ||
      !std::isfinite(b.h)) {
    return false;
  }
  if (b.w < 0.0 || b.h < 0.0) return false;
  if (b.x < 0.0 || b.y < 0.0) return false;
  return b.x + b.w <= 1.0 && b.y + b.h <= 1.0;
}

void require_bbox(const BBox& b, const std::string& what) {
  if (!bbox_ok(b)) {
    throw ValidationError(what + ": bbox [" + std::to_string(b.x) + ", " +
                          std::to_string(b.y) + ", " + std::to_string(b.w) +
                          ", " + std::to_string(b.h) +
                          "] outside the unit square or negative");
  }
}

bool closed_overlap(const BBox& a, const BBox& b) {
  return a.x <= b.x + b.w && b.x <= a.x + a.w && a.y <= b.y + b.h &&
         b.y <= a.y + a.h;
}

double intersection_area(const BBox& a, const BBox& b) {
  double w = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  double h = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

BBox join(const BBox& a, const BBox& b) {
  double x0 = std::min(a.x, b.x);
  double y0 = std::min(a.y, b.y);
  double x1 = std::max(a.x + a.w, b.x + b.w);
  double y1 = std::max(a.y + a.h, b.y + b.h);
  return BBox{x0, y0, x1 - x0, y1 - y0};
}

BBox dilate(const BBox& b, double dx, double dy) {
  double x0 = std::max(0.0, b.x - dx);
  double y0 = std::max(0.0, b.y - dy);
  double x1 = std::min(1.0, b.x + b.w + dx);
  double y1 = std::min(1.0, b.y + b.h + dy);
  return BBox{x0, y0, x1 - x0, y1 - y0};
}

}  // namespace paralabel
