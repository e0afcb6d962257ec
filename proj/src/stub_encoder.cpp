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

#include "hdtile/stub_encoder.hpp"

#include <string>

#include "hdtile/error.hpp"
#include "hdtile/rng.hpp"

namespace hdtile {

double block_hash(const ImageBuffer& patch, int row, int col) {
  const std::size_t block_bytes = static_cast<std::size_t>(kVitPatchPx) * patch.channels();
  std::uint64_t h = 0;
  for (int y = row * kVitPatchPx; y < (row + 1) * kVitPatchPx; ++y) {
    h = hash_bytes(h, patch.row(y).subspan(col * block_bytes, block_bytes));
  }
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

FeatureGrid encode_stub(const ImageBuffer& patch, int patch_index) {
  if (patch.width() != kSubimagePx || patch.height() != kSubimagePx) {
    throw InvalidArgument("encode_stub expects a 336x336 patch, got " +
                          std::to_string(patch.width()) + "x" +
                          std::to_string(patch.height()));
  }
  FeatureGrid grid(kVitGrid, kVitGrid, kStubChannels);
  for (int r = 0; r < kVitGrid; ++r) {
    for (int c = 0; c < kVitGrid; ++c) {
      auto f = grid.at(r, c);
      f[kStubPatchIndex] = patch_index;
      f[kStubRow] = r;
      f[kStubCol] = c;
      f[kStubContentHash] = block_hash(patch, r, c);
    }
  }
  return grid;
}

}  // namespace hdtile
