// paralabel/render.hpp
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
// SVG debug overlays: one image per page with the OCR word boxes in the
// background and any number of named box layers drawn on top.

#pragma once

#include <string>
#include <vector>

#include "paralabel/document.hpp"

namespace paralabel {

struct OverlayBox {
  int page = 0;
  BBox bbox;  // normalized
};

struct OverlayLayer {
  std::string name;
  std::string color;  // any SVG color, e.g. "#d62728"
  std::vector<OverlayBox> boxes;
};

// Renders one page to a standalone SVG string. Word boxes are drawn in
// light gray; each layer's boxes use its color; a legend lists the layer
// names. Output is deterministic for identical inputs.
std::string render_page_svg(const Document& doc, int page,
                            const std::vector<OverlayLayer>& layers);

}  // namespace paralabel
