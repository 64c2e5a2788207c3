// paralabel/geometry.hpp
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
// Axis-aligned boxes in normalized page coordinates (origin top-left,
// x right, y down, both in [0,1]).

#pragma once

#include <algorithm>
#include <string>

namespace paralabel {

struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  friend bool operator==(const BBox& a, const BBox& b) {
    return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
  }
};

inline double area(const BBox& b) { return b.w * b.h; }

// Finite, non-negative size, contained in the unit square.
bool bbox_ok(const BBox& b);

// Throws ValidationError naming `what` when bbox_ok fails.
void require_bbox(const BBox& b, const std::string& what);

// Overlap of the closed boxes; shared edges and corners count.
bool closed_overlap(const BBox& a, const BBox& b);

// Area of the open intersection; 0 for mere edge contact.
double intersection_area(const BBox& a, const BBox& b);

// Smallest box covering both.
BBox join(const BBox& a, const BBox& b);

// Grow by dx/dy on every side, clamped to the unit square.
BBox dilate(const BBox& b, double dx, double dy);

}  // namespace paralabel
