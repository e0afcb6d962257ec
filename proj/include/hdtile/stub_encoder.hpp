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

#include <cstdint>

#include "hdtile/features.hpp"
#include "hdtile/image.hpp"

namespace hdtile {

// Channels of a stub feature: provenance plus a content fingerprint.
enum StubChannel : int {
  kStubPatchIndex = 0,
  kStubRow = 1,
  kStubCol = 2,
  kStubContentHash = 3,
};
inline constexpr int kStubChannels = 4;

// Hash of the 14x14 pixel block under ViT token (row, col), all channels,
// reduced to [0, 1) from the top 53 bits.
double block_hash(const ImageBuffer& patch, int row, int col);

// Network-free stand-in for the vision encoder: a 24x24x4 grid whose token
// (r, c) is [patch_index, r, c, block_hash(r, c)]. Throws InvalidArgument
// unless `patch` is 336x336.
FeatureGrid encode_stub(const ImageBuffer& patch, int patch_index);

}  // namespace hdtile
