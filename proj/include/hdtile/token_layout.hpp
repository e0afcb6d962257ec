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
#include <string>
#include <string_view>
#include <vector>

#include "hdtile/features.hpp"
#include "hdtile/partition.hpp"

namespace hdtile {

enum class TokenKind : std::uint8_t { kGlobalFeature, kLocalFeature, kNewline, kSeparator };

// One position in the visual token stream. `row` is the merged-grid row the
// token belongs to (newlines carry the row they terminate); `col` is set for
// feature tokens only. Absent coordinates are kNoCoord.
struct TokenDescriptor {
  static constexpr int kNoCoord = -1;

  TokenKind kind = TokenKind::kSeparator;
  int row = kNoCoord;
  int col = kNoCoord;

  static TokenDescriptor global(int r, int c) { return {TokenKind::kGlobalFeature, r, c}; }
  static TokenDescriptor local(int r, int c) { return {TokenKind::kLocalFeature, r, c}; }
  static TokenDescriptor newline(int r) { return {TokenKind::kNewline, r, kNoCoord}; }
  static TokenDescriptor separator() { return {}; }

  bool is_feature() const noexcept {
    return kind == TokenKind::kGlobalFeature || kind == TokenKind::kLocalFeature;
  }

  friend bool operator==(const TokenDescriptor&, const TokenDescriptor&) = default;
};

struct TokenLayout {
  std::vector<TokenDescriptor> tokens;
  PartitionPlan plan;
};

// Global block: 12 rows of (12 features + newline).
inline constexpr int kGlobalBlockTokens = kMergedGrid * (kMergedGrid + 1);
inline constexpr std::size_t kSeparatorIndex = kGlobalBlockTokens;

// 157 + 144 * p_w * p_h + 12 * p_h. Throws InvalidArgument for p_w, p_h < 1.
std::int64_t token_count(int p_w, int p_h);
// Largest token_count over all grids allowed by max_patches: 157 + 156 * H.
std::int64_t max_token_count(int max_patches);

// Channel-concatenating 2x2 merge: out[r][c] = in[2r][2c] ++ in[2r][2c+1]
// ++ in[2r+1][2c] ++ in[2r+1][2c+1]. Throws InvalidArgument on odd sizes.
FeatureGrid merge_2x2(const FeatureGrid& features);

// Places per-patch merged maps (row-major patch order, each 12x12) into the
// full (12 p_h) x (12 p_w) local feature map.
FeatureGrid reassemble_local(const std::vector<FeatureGrid>& merged_patches,
                             const PartitionPlan& plan);

// [global rows + newlines] [separator] [local rows + newlines].
TokenLayout assemble_layout(const PartitionPlan& plan);

// Coordinates recovered from a token stream, in stream order.
struct MergedCoord {
  int row;
  int col;
  friend bool operator==(const MergedCoord&, const MergedCoord&) = default;
};

struct LayoutCoords {
  std::vector<MergedCoord> global;
  std::vector<MergedCoord> local;
};

// Validates the stream grammar against layout.plan and returns the feature
// coordinates of each view. Throws LayoutError at the first offending index.
LayoutCoords layout_to_grid(const TokenLayout& layout);

// Materializes the stream as a (tokens x channels) matrix: feature tokens
// take their vector from the global or local map, markers are zero rows.
std::vector<double> gather_features(const TokenLayout& layout, const FeatureGrid& global_map,
                                    const FeatureGrid& local_map);

// Line-oriented text form: `G r c`, `L r c`, `NL`, `SEP`, one per line.
std::string to_text(const TokenLayout& layout);
// Parses the text form; the plan is attached as-is (validate with
// layout_to_grid). Throws LayoutError on unparseable lines.
TokenLayout parse_text(std::string_view text, const PartitionPlan& plan);

}  // namespace hdtile
