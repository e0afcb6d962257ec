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

#include "hdtile/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdtile/error.hpp"

namespace hdtile {
namespace {

void check_shape(int width, int height, int channels) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("channels must be 1 or 3, got " + std::to_string(channels));
  }
}

std::size_t byte_size(int width, int height, int channels) {
  return static_cast<std::size_t>(width) * height * channels;
}

struct Tap {
  int lo;
  int hi;
  double frac;
};

std::vector<Tap> make_taps(int in, int out) {
  std::vector<Tap> taps(out);
  const double scale = static_cast<double>(in) / out;
  for (int i = 0; i < out; ++i) {
    double src = (i + 0.5) * scale - 0.5;
    src = std::clamp(src, 0.0, static_cast<double>(in - 1));
    const int lo = static_cast<int>(std::floor(src));
    taps[i] = {lo, std::min(lo + 1, in - 1), src - lo};
  }
  return taps;
}

void check_plan_matches(const ImageBuffer& img, const PartitionPlan& plan) {
  if (img.width() != plan.source_w || img.height() != plan.source_h) {
    throw InvalidArgument("image is " + std::to_string(img.width()) + "x" +
                          std::to_string(img.height()) + " but plan was solved for " +
                          std::to_string(plan.source_w) + "x" +
                          std::to_string(plan.source_h));
  }
}

}  // namespace

ImageBuffer::ImageBuffer(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  data_.assign(byte_size(width, height, channels), 0);
}

ImageBuffer::ImageBuffer(int width, int height, int channels,
                         std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  check_shape(width, height, channels);
  if (data_.size() != byte_size(width, height, channels)) {
    throw InvalidArgument("buffer holds " + std::to_string(data_.size()) +
                          " bytes, expected " +
                          std::to_string(byte_size(width, height, channels)));
  }
}

ImageBuffer resize_bilinear(const ImageBuffer& img, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) {
    throw InvalidArgument("resize target must be positive, got " +
                          std::to_string(out_w) + "x" + std::to_string(out_h));
  }
  const int ch = img.channels();
  ImageBuffer out(out_w, out_h, ch);
  const auto xs = make_taps(img.width(), out_w);
  const auto ys = make_taps(img.height(), out_h);
  const std::size_t out_stride = out.row_stride();

  // Horizontal pass for one source row, cached for the two rows a output row
  // needs; output rows visit source rows in non-decreasing order.
  auto horizontal = [&](int src_y, std::vector<double>& dst) {
    const auto src = img.row(src_y);
    for (int x = 0; x < out_w; ++x) {
      const Tap& tx = xs[x];
      const std::size_t l = static_cast<std::size_t>(tx.lo) * ch;
      const std::size_t r = static_cast<std::size_t>(tx.hi) * ch;
      for (int c = 0; c < ch; ++c) {
        dst[static_cast<std::size_t>(x) * ch + c] =
            src[l + c] + (src[r + c] - src[l + c]) * tx.frac;
      }
    }
  };
  std::vector<double> top(out_stride);
  std::vector<double> bottom(out_stride);
  int top_y = -1;
  int bottom_y = -1;

  for (int y = 0; y < out_h; ++y) {
    const Tap& ty = ys[y];
    if (ty.lo != top_y) {
      if (ty.lo == bottom_y) {
        std::swap(top, bottom);
        std::swap(top_y, bottom_y);
      } else {
        horizontal(ty.lo, top);
        top_y = ty.lo;
      }
    }
    if (ty.hi != bottom_y) {
      if (ty.hi == top_y) {
        bottom = top;
      } else {
        horizontal(ty.hi, bottom);
      }
      bottom_y = ty.hi;
    }
    auto dst = out.row(y);
    for (std::size_t i = 0; i < out_stride; ++i) {
      const double v = top[i] + (bottom[i] - top[i]) * ty.frac;
      // v is a convex combination of samples, so it lies in [0, 255].
      dst[i] = static_cast<std::uint8_t>(v + 0.5);
    }
  }
  return out;
}

ImageBuffer make_canvas(const ImageBuffer& img, const PartitionPlan& plan) {
  check_plan_matches(img, plan);
  ImageBuffer canvas(plan.canvas_w, plan.canvas_h, img.channels());
  const ImageBuffer resized = resize_bilinear(img, plan.resized_w, plan.resized_h);
  std::copy(resized.data().begin(), resized.data().end(), canvas.data().begin());
  auto pad = canvas.data().subspan(resized.data().size());
  std::fill(pad.begin(), pad.end(), kPadValue);
  return canvas;
}

PatchSet slice_patches(const ImageBuffer& canvas, const PartitionPlan& plan,
                       const ImageBuffer& original) {
  if (canvas.width() != plan.canvas_w || canvas.height() != plan.canvas_h) {
    throw InvalidArgument("canvas is " + std::to_string(canvas.width()) + "x" +
                          std::to_string(canvas.height()) + ", plan expects " +
                          std::to_string(plan.canvas_w) + "x" +
                          std::to_string(plan.canvas_h));
  }
  if (canvas.channels() != original.channels()) {
    throw InvalidArgument("canvas and original image differ in channel count");
  }
  const int ch = canvas.channels();
  const std::size_t tile_row = static_cast<std::size_t>(kSubimagePx) * ch;

  std::vector<ImageBuffer> patches;
  patches.reserve(plan.patch_count());
  for (int r = 0; r < plan.p_h; ++r) {
    for (int c = 0; c < plan.p_w; ++c) {
      ImageBuffer patch(kSubimagePx, kSubimagePx, ch);
      for (int y = 0; y < kSubimagePx; ++y) {
        const auto src = canvas.row(r * kSubimagePx + y).subspan(c * tile_row, tile_row);
        std::copy(src.begin(), src.end(), patch.row(y).begin());
      }
      patches.push_back(std::move(patch));
    }
  }
  return PatchSet{resize_bilinear(original, kSubimagePx, kSubimagePx),
                  std::move(patches), plan};
}

PatchSet tile_image(const ImageBuffer& img, const HdSetting& setting) {
  const PartitionPlan plan = plan_partition(img.width(), img.height(), setting);
  return slice_patches(make_canvas(img, plan), plan, img);
}

}  // namespace hdtile
