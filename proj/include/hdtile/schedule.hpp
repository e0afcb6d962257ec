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
#include <string>
#include <string_view>
#include <vector>

#include "hdtile/hd_setting.hpp"

namespace hdtile {

// Named HD presets: HD9, HD16, HD25, HD30, HD55 ("HD-25" is also accepted).
HdSetting preset(std::string_view name);
const std::vector<std::string>& preset_names();

inline constexpr int kMixedResolutionCap = 25;

// Smallest patch count that covers the image without downscaling,
// capped at 25.
int native_patch_count(int width, int height);

// Draws an effective patch budget uniformly from [native_patch_count, 25].
// Deterministic in (width, height, seed).
HdSetting sample_mixed_resolution(int width, int height, std::uint64_t seed);

enum class Bucket : std::uint8_t { kHd25, kHd55 };
std::string_view bucket_name(Bucket bucket);

struct SourceSpec {
  std::string name;
  std::int64_t sample_count = 0;
  Bucket bucket = Bucket::kHd25;
};

struct BatchStep {
  Bucket bucket;
  std::vector<int> draws;  // indices into BatchPlan::sources

  friend bool operator==(const BatchStep&, const BatchStep&) = default;
};

struct BatchPlan {
  std::vector<SourceSpec> sources;
  std::vector<BatchStep> steps;
  int batch_size_hd25 = 0;
  int batch_size_hd55 = 0;
  std::uint64_t seed = 0;

  int batch_size(Bucket b) const noexcept {
    return b == Bucket::kHd25 ? batch_size_hd25 : batch_size_hd55;
  }
};

// Per-sample target share of each source (sample_count / total).
std::vector<double> normalized_weights(const std::vector<SourceSpec>& sources);

// Weighted dual-bucket schedule. Each step picks a bucket with probability
// proportional to (bucket samples / bucket batch size); HD55 batches are half
// the HD25 size, so HD55 steps are drawn twice as often per sample. Within a
// step, each slot draws a source proportionally to sample_count.
BatchPlan plan_batches(const std::vector<SourceSpec>& sources, int steps, int batch_hd25,
                       std::uint64_t seed);

// {"seed", "batch_sizes": {"HD25", "HD55"}, "steps": [{"bucket", "sources": [...]}]}
std::string to_json(const BatchPlan& plan, int indent = -1);

}  // namespace hdtile
