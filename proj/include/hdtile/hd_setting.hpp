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

#include <string>
#include <string_view>

namespace hdtile {

// Fixed vision-encoder geometry: a 336 px sub-image seen by a ViT with
// 14 px patches gives a 24x24 token grid, merged 2x2 down to 12x12.
inline constexpr int kSubimagePx = 336;
inline constexpr int kVitPatchPx = 14;
inline constexpr int kVitGrid = 24;
inline constexpr int kMergedGrid = 12;

static_assert(kSubimagePx == kVitPatchPx * kVitGrid);
static_assert(kMergedGrid * 2 == kVitGrid);

// An `HD-n` setting: at most `max_patches` sub-images per image.
class HdSetting {
 public:
  // Throws InvalidArgument when max_patches < 1.
  explicit HdSetting(int max_patches);

  int max_patches() const noexcept { return max_patches_; }
  static constexpr int subimage_px() noexcept { return kSubimagePx; }
  static constexpr int vit_grid() noexcept { return kVitGrid; }
  static constexpr int merged_grid() noexcept { return kMergedGrid; }

  // Canonical name, e.g. "HD25".
  std::string name() const;

  friend bool operator==(const HdSetting&, const HdSetting&) = default;

 private:
  int max_patches_;
};

}  // namespace hdtile
