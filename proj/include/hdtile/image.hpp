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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdtile/hd_setting.hpp"
#include "hdtile/partition.hpp"

namespace hdtile {

// Owned row-major 8-bit image, interleaved channels (1 = gray, 3 = RGB).
class ImageBuffer {
 public:
  // Zero-filled image. Throws InvalidArgument on bad shape.
  ImageBuffer(int width, int height, int channels);
  // Takes ownership of `data`; its size must be width * height * channels.
  ImageBuffer(int width, int height, int channels, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t row_stride() const noexcept {
    return static_cast<std::size_t>(width_) * channels_;
  }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  std::span<const std::uint8_t> row(int y) const noexcept {
    return std::span<const std::uint8_t>(data_).subspan(y * row_stride(), row_stride());
  }
  std::span<std::uint8_t> row(int y) noexcept {
    return std::span<std::uint8_t>(data_).subspan(y * row_stride(), row_stride());
  }

  std::uint8_t at(int x, int y, int c) const noexcept {
    return data_[y * row_stride() + static_cast<std::size_t>(x) * channels_ + c];
  }
  std::uint8_t& at(int x, int y, int c) noexcept {
    return data_[y * row_stride() + static_cast<std::size_t>(x) * channels_ + c];
  }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  int width_;
  int height_;
  int channels_;
  std::vector<std::uint8_t> data_;
};

// Global view plus row-major local patches for one image.
struct PatchSet {
  ImageBuffer global_view;
  std::vector<ImageBuffer> local_patches;
  PartitionPlan plan;
};

inline constexpr std::uint8_t kPadValue = 0;

// Bilinear resize with half-pixel centers: output pixel i samples source
// coordinate (i + 0.5) * in / out - 0.5, clamped to [0, in - 1]; results are
// rounded half-up.
ImageBuffer resize_bilinear(const ImageBuffer& img, int out_w, int out_h);

// Resizes `img` into the top of the plan's canvas and zero-fills the rest.
ImageBuffer make_canvas(const ImageBuffer& img, const PartitionPlan& plan);

// Cuts the canvas into 336x336 tiles (row-major) and resizes `original`
// (not the padded canvas) to the 336x336 global view.
PatchSet slice_patches(const ImageBuffer& canvas, const PartitionPlan& plan,
                       const ImageBuffer& original);

// plan_partition + make_canvas + slice_patches.
PatchSet tile_image(const ImageBuffer& img, const HdSetting& setting);

}  // namespace hdtile
