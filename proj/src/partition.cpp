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

#include "hdtile/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "hdtile/error.hpp"

namespace hdtile {
namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

// round(num / den) with halves rounded up; num, den > 0.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
  return (2 * num + den) / (2 * den);
}

}  // namespace

PartitionPlan plan_partition(int width, int height, const HdSetting& setting) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  const std::int64_t w = width;
  const std::int64_t h = height;
  const int budget = setting.max_patches();

  PartitionPlan plan;
  plan.source_w = width;
  plan.source_h = height;
  plan.max_patches = budget;

  // p_w * ceil(p_w * h / w) is increasing in p_w, so the feasible columns
  // form a prefix 1..k and the first hit scanning downward is the widest.
  for (int cols = budget; cols >= 1; --cols) {
    const std::int64_t rows = ceil_div(cols * h, w);
    if (cols * rows <= budget) {
      plan.p_w = cols;
      plan.p_h = static_cast<int>(rows);
      break;
    }
  }
  if (plan.p_w == 0) {
    plan.p_w = 1;
    plan.p_h = budget;
    plan.clamped = true;
  }

  plan.canvas_w = plan.p_w * kSubimagePx;
  plan.canvas_h = plan.p_h * kSubimagePx;
  plan.resized_w = plan.canvas_w;
  // Rounding can land exactly one sub-image row short of the canvas when the
  // exact height sits less than half a pixel past a multiple of 336; keep the
  // pad strictly below one sub-image.
  const std::int64_t exact = round_div(plan.canvas_w * h, w);
  const std::int64_t lo = plan.canvas_h - (kSubimagePx - 1);
  plan.resized_h = static_cast<int>(std::clamp<std::int64_t>(exact, lo, plan.canvas_h));
  plan.pad_bottom = plan.canvas_h - plan.resized_h;
  return plan;
}

GridShape max_layout(const HdSetting& setting) noexcept {
  return {1, setting.max_patches()};
}

}  // namespace hdtile
