// Copyright 2026 The hdtile Authors
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

#pragma once

#include "hdtile/hd_setting.hpp"

namespace hdtile {

// Solved canvas geometry for one image under one HdSetting.
//
// The source is resized to `resized_w x resized_h` (width always fills the
// canvas) and placed at the top of a `canvas_w x canvas_h` canvas; the
// remaining `pad_bottom` rows are padding.
struct PartitionPlan {
  int source_w = 0;
  int source_h = 0;
  int max_patches = 0;
  int p_w = 0;  // patch columns
  int p_h = 0;  // patch rows
  int canvas_w = 0;
  int canvas_h = 0;
  int resized_w = 0;
  int resized_h = 0;
  int pad_bottom = 0;
  // Set when even a single column needs more than max_patches rows; p_h is
  // then capped at max_patches and the image is squashed vertically.
  bool clamped = false;

  int patch_count() const noexcept { return p_w * p_h; }

  friend bool operator==(const PartitionPlan&, const PartitionPlan&) = default;
};

struct GridShape {
  int p_w = 0;
  int p_h = 0;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// Picks the widest grid satisfying
//   p_w * p_h <= max_patches,  p_h = ceil(p_w * height / width)
// and derives the resize/pad geometry. Throws InvalidArgument for
// non-positive dimensions.
PartitionPlan plan_partition(int width, int height, const HdSetting& setting);

// The grid that maximizes the visual token count under `setting`: a single
// column of max_patches rows.
GridShape max_layout(const HdSetting& setting) noexcept;

}  // namespace hdtile
