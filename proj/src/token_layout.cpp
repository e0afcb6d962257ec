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

#include "hdtile/token_layout.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hdtile/error.hpp"

namespace hdtile {
namespace {

constexpr std::int64_t kGlobalAndSeparator = kGlobalBlockTokens + 1;  // 157
constexpr std::int64_t kTokensPerPatch = kMergedGrid * kMergedGrid;   // 144

const char* kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kGlobalFeature: return "global feature";
    case TokenKind::kLocalFeature: return "local feature";
    case TokenKind::kNewline: return "newline";
    case TokenKind::kSeparator: return "separator";
  }
  return "?";
}

// Walks the expected stream once; `visit(index, expected)` is called per
// position.
template <typename Visit>
void for_each_expected(const PartitionPlan& plan, Visit&& visit) {
  std::size_t i = 0;
  for (int r = 0; r < kMergedGrid; ++r) {
    for (int c = 0; c < kMergedGrid; ++c) visit(i++, TokenDescriptor::global(r, c));
    visit(i++, TokenDescriptor::newline(r));
  }
  visit(i++, TokenDescriptor::separator());
  const int rows = kMergedGrid * plan.p_h;
  const int cols = kMergedGrid * plan.p_w;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) visit(i++, TokenDescriptor::local(r, c));
    visit(i++, TokenDescriptor::newline(r));
  }
}

}  // namespace

std::int64_t token_count(int p_w, int p_h) {
  if (p_w < 1 || p_h < 1) {
    throw InvalidArgument("grid must be at least 1x1, got " + std::to_string(p_w) + "x" +
                          std::to_string(p_h));
  }
  return kGlobalAndSeparator + kTokensPerPatch * p_w * p_h +
         static_cast<std::int64_t>(kMergedGrid) * p_h;
}

std::int64_t max_token_count(int max_patches) {
  if (max_patches < 1) {
    throw InvalidArgument("max_patches must be >= 1, got " + std::to_string(max_patches));
  }
  return kGlobalAndSeparator + (kTokensPerPatch + kMergedGrid) * max_patches;
}

FeatureGrid merge_2x2(const FeatureGrid& in) {
  if (in.rows() % 2 != 0 || in.cols() % 2 != 0) {
    throw InvalidArgument("merge_2x2 needs even grid sides, got " +
                          std::to_string(in.rows()) + "x" + std::to_string(in.cols()));
  }
  const int ch = in.channels();
  FeatureGrid out(in.rows() / 2, in.cols() / 2, 4 * ch);
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      auto dst = out.at(r, c).begin();
      for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
          const auto src = in.at(2 * r + dy, 2 * c + dx);
          dst = std::copy(src.begin(), src.end(), dst);
        }
      }
    }
  }
  return out;
}

FeatureGrid reassemble_local(const std::vector<FeatureGrid>& merged_patches,
                             const PartitionPlan& plan) {
  if (static_cast<int>(merged_patches.size()) != plan.patch_count()) {
    throw InvalidArgument("expected " + std::to_string(plan.patch_count()) +
                          " patch feature maps, got " +
                          std::to_string(merged_patches.size()));
  }
  const int ch = merged_patches.front().channels();
  FeatureGrid mosaic(kMergedGrid * plan.p_h, kMergedGrid * plan.p_w, ch);
  for (int k = 0; k < plan.patch_count(); ++k) {
    const FeatureGrid& patch = merged_patches[k];
    if (patch.rows() != kMergedGrid || patch.cols() != kMergedGrid || patch.channels() != ch) {
      throw InvalidArgument("patch feature map " + std::to_string(k) +
                            " is not 12x12 with a consistent channel count");
    }
    const int r0 = (k / plan.p_w) * kMergedGrid;
    const int c0 = (k % plan.p_w) * kMergedGrid;
    for (int r = 0; r < kMergedGrid; ++r) {
      for (int c = 0; c < kMergedGrid; ++c) {
        const auto src = patch.at(r, c);
        std::copy(src.begin(), src.end(), mosaic.at(r0 + r, c0 + c).begin());
      }
    }
  }
  return mosaic;
}

TokenLayout assemble_layout(const PartitionPlan& plan) {
  TokenLayout layout{{}, plan};
  layout.tokens.reserve(static_cast<std::size_t>(token_count(plan.p_w, plan.p_h)));
  for_each_expected(plan, [&](std::size_t, const TokenDescriptor& t) {
    layout.tokens.push_back(t);
  });
  return layout;
}

LayoutCoords layout_to_grid(const TokenLayout& layout) {
  const auto& plan = layout.plan;
  const auto expected_len = static_cast<std::size_t>(token_count(plan.p_w, plan.p_h));
  LayoutCoords coords;
  coords.global.reserve(kMergedGrid * kMergedGrid);
  coords.local.reserve(static_cast<std::size_t>(kTokensPerPatch) * plan.patch_count());

  for_each_expected(plan, [&](std::size_t i, const TokenDescriptor& want) {
    if (i >= layout.tokens.size()) {
      throw LayoutError(i, "stream ends early (expected " + std::to_string(expected_len) +
                               " tokens)");
    }
    const TokenDescriptor& got = layout.tokens[i];
    if (got.kind != want.kind) {
      throw LayoutError(i, std::string("expected ") + kind_name(want.kind) + ", found " +
                               kind_name(got.kind));
    }
    if (got != want) {
      throw LayoutError(i, std::string(kind_name(got.kind)) + " has coordinates (" +
                               std::to_string(got.row) + ", " + std::to_string(got.col) +
                               "), expected (" + std::to_string(want.row) + ", " +
                               std::to_string(want.col) + ")");
    }
    if (got.kind == TokenKind::kGlobalFeature) coords.global.push_back({got.row, got.col});
    if (got.kind == TokenKind::kLocalFeature) coords.local.push_back({got.row, got.col});
  });
  if (layout.tokens.size() != expected_len) {
    throw LayoutError(expected_len, "trailing tokens after the last local row");
  }
  return coords;
}

std::vector<double> gather_features(const TokenLayout& layout, const FeatureGrid& global_map,
                                    const FeatureGrid& local_map) {
  const int ch = global_map.channels();
  if (local_map.channels() != ch) {
    throw InvalidArgument("global and local feature maps differ in channel count");
  }
  if (global_map.rows() != kMergedGrid || global_map.cols() != kMergedGrid) {
    throw InvalidArgument("global feature map must be 12x12");
  }
  if (local_map.rows() != kMergedGrid * layout.plan.p_h ||
      local_map.cols() != kMergedGrid * layout.plan.p_w) {
    throw InvalidArgument("local feature map does not match the layout's grid");
  }
  std::vector<double> stream(layout.tokens.size() * ch, 0.0);
  for (std::size_t i = 0; i < layout.tokens.size(); ++i) {
    const TokenDescriptor& t = layout.tokens[i];
    if (!t.is_feature()) continue;
    const auto& map = t.kind == TokenKind::kGlobalFeature ? global_map : local_map;
    const auto src = map.at(t.row, t.col);
    std::copy(src.begin(), src.end(), stream.begin() + static_cast<std::ptrdiff_t>(i * ch));
  }
  return stream;
}

std::string to_text(const TokenLayout& layout) {
  std::ostringstream out;
  for (const auto& t : layout.tokens) {
    switch (t.kind) {
      case TokenKind::kGlobalFeature: out << "G " << t.row << ' ' << t.col << '\n'; break;
      case TokenKind::kLocalFeature: out << "L " << t.row << ' ' << t.col << '\n'; break;
      case TokenKind::kNewline: out << "NL\n"; break;
      case TokenKind::kSeparator: out << "SEP\n"; break;
    }
  }
  return out.str();
}

TokenLayout parse_text(std::string_view text, const PartitionPlan& plan) {
  TokenLayout layout{{}, plan};
  // Newlines carry no row in the text form; it is restored from the number
  // of newlines seen so far within each view.
  int row_in_view = 0;
  std::size_t index = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (line == "NL") {
      layout.tokens.push_back(TokenDescriptor::newline(row_in_view++));
    } else if (line == "SEP") {
      layout.tokens.push_back(TokenDescriptor::separator());
      row_in_view = 0;
    } else if ((line[0] == 'G' || line[0] == 'L') && line.size() > 2 && line[1] == ' ') {
      int r = 0;
      int c = 0;
      const char* p = line.data() + 2;
      const char* end = line.data() + line.size();
      auto [p1, e1] = std::from_chars(p, end, r);
      bool ok = e1 == std::errc{} && p1 < end && *p1 == ' ';
      if (ok) {
        auto [p2, e2] = std::from_chars(p1 + 1, end, c);
        ok = e2 == std::errc{} && p2 == end;
      }
      if (!ok) throw LayoutError(index, "cannot parse '" + std::string(line) + "'");
      layout.tokens.push_back(line[0] == 'G' ? TokenDescriptor::global(r, c)
                                             : TokenDescriptor::local(r, c));
    } else {
      throw LayoutError(index, "unknown token '" + std::string(line) + "'");
    }
    ++index;
  }
  return layout;
}

}  // namespace hdtile
