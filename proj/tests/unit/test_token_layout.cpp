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

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "hdtile/error.hpp"
#include "hdtile/token_layout.hpp"
#include "test_support.hpp"

using namespace hdtile;

namespace {

PartitionPlan grid_plan(int p_w, int p_h) {
  PartitionPlan plan;
  plan.p_w = p_w;
  plan.p_h = p_h;
  return plan;
}

FeatureGrid iota_grid(int rows, int cols, int channels, double start = 0.0) {
  std::vector<double> v(static_cast<std::size_t>(rows) * cols * channels);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = start + static_cast<double>(i);
  return FeatureGrid(rows, cols, channels, std::move(v));
}

std::size_t count_kind(const TokenLayout& layout, TokenKind kind) {
  return static_cast<std::size_t>(std::count_if(layout.tokens.begin(), layout.tokens.end(),
                                                [&](const auto& t) { return t.kind == kind; }));
}

}  // namespace

TEST_CASE("merge_2x2") {
  SUBCASE("minimal block") {
    const auto out = merge_2x2(FeatureGrid(2, 2, 1, {1, 2, 3, 4}));
    CHECK(out.rows() == 1);
    CHECK(out.cols() == 1);
    CHECK(out.channels() == 4);
    CHECK(std::vector<double>(out.values().begin(), out.values().end()) ==
          std::vector<double>{1, 2, 3, 4});
  }
  SUBCASE("24x24 flat index") {
    const auto out = merge_2x2(iota_grid(24, 24, 1));
    CHECK(out.rows() == 12);
    CHECK(out.cols() == 12);
    const auto first = out.at(0, 0);
    CHECK(std::vector<double>(first.begin(), first.end()) == std::vector<double>{0, 1, 24, 25});
    const auto last = out.at(11, 11);
    CHECK(std::vector<double>(last.begin(), last.end()) ==
          std::vector<double>{550, 551, 574, 575});
  }
  SUBCASE("matches the naive oracle") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> half(1, 8);
    std::uniform_int_distribution<int> chans(1, 5);
    for (int i = 0; i < 50; ++i) {
      const auto in = iota_grid(2 * half(rng), 2 * half(rng), chans(rng), i * 1000.0);
      const auto out = merge_2x2(in);
      REQUIRE(std::vector<double>(out.values().begin(), out.values().end()) ==
              testing::naive_merge(in));
      // Conservation: same multiset of values.
      auto a = std::vector<double>(in.values().begin(), in.values().end());
      auto b = std::vector<double>(out.values().begin(), out.values().end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      REQUIRE(a == b);
    }
    CHECK(merge_2x2(iota_grid(4, 4, 2)).channels() == 8);
  }
  SUBCASE("odd sides are rejected") {
    CHECK_THROWS_AS(merge_2x2(FeatureGrid(3, 2, 1)), InvalidArgument);
    CHECK_THROWS_AS(merge_2x2(FeatureGrid(2, 5, 1)), InvalidArgument);
  }
}

TEST_CASE("token_count closed form") {
  CHECK(token_count(1, 1) == 313);
  CHECK(token_count(3, 3) == 1489);
  CHECK(token_count(11, 5) == 8137);
  CHECK(max_token_count(9) == 1561);
  CHECK(max_token_count(16) == 2653);
  CHECK(max_token_count(25) == 4057);
  CHECK(max_token_count(55) == 8737);
  CHECK_THROWS_AS(token_count(0, 1), InvalidArgument);
  CHECK_THROWS_AS(max_token_count(0), InvalidArgument);
}

TEST_CASE("maximum is attained by a single column") {
  for (int H = 1; H <= 64; ++H) {
    std::int64_t best = 0;
    GridShape arg{};
    for (int pw = 1; pw <= H; ++pw) {
      for (int ph = 1; pw * ph <= H; ++ph) {
        const auto n = static_cast<std::int64_t>(assemble_layout(grid_plan(pw, ph)).tokens.size());
        if (n > best) {
          best = n;
          arg = {pw, ph};
        }
      }
    }
    CAPTURE(H);
    REQUIRE(best == max_token_count(H));
    REQUIRE(arg == max_layout(HdSetting(H)));
  }
}

TEST_CASE("assemble_layout structure") {
  SUBCASE("counts") {
    CHECK(assemble_layout(grid_plan(1, 1)).tokens.size() == 313);
    CHECK(assemble_layout(grid_plan(1, 9)).tokens.size() == 1561);
    CHECK(assemble_layout(grid_plan(3, 3)).tokens.size() == 1489);
  }
  SUBCASE("grammar") {
    for (const auto [pw, ph] : {std::pair{1, 1}, {2, 4}, {11, 5}, {1, 55}, {7, 1}}) {
      const auto layout = assemble_layout(grid_plan(pw, ph));
      CAPTURE(pw);
      CAPTURE(ph);
      REQUIRE(static_cast<std::int64_t>(layout.tokens.size()) == token_count(pw, ph));
      REQUIRE(count_kind(layout, TokenKind::kSeparator) == 1);
      REQUIRE(layout.tokens[kSeparatorIndex].kind == TokenKind::kSeparator);
      REQUIRE(count_kind(layout, TokenKind::kNewline) ==
              static_cast<std::size_t>(12 * (ph + 1)));
      for (int k = 0; k < 12; ++k) REQUIRE(layout.tokens[12 + 13 * k].kind == TokenKind::kNewline);

      // Every maximal feature run ends in exactly one newline.
      std::size_t run = 0;
      bool in_local = false;
      for (const auto& t : layout.tokens) {
        if (t.is_feature()) {
          REQUIRE((t.kind == TokenKind::kLocalFeature) == in_local);
          ++run;
        } else if (t.kind == TokenKind::kNewline) {
          REQUIRE(run == static_cast<std::size_t>(in_local ? 12 * pw : 12));
          run = 0;
        } else {
          REQUIRE(run == 0);
          in_local = true;
        }
      }
      REQUIRE(run == 0);
    }
  }
}

TEST_CASE("layout_to_grid inverts assemble_layout") {
  for (const auto [pw, ph] : {std::pair{2, 4}, {11, 5}, {1, 1}}) {
    const auto layout = assemble_layout(grid_plan(pw, ph));
    const auto coords = layout_to_grid(layout);
    REQUIRE(coords.global.size() == 144);
    REQUIRE(coords.local.size() == static_cast<std::size_t>(144 * pw * ph));
    std::size_t k = 0;
    for (int r = 0; r < 12 * ph; ++r)
      for (int c = 0; c < 12 * pw; ++c) REQUIRE(coords.local[k++] == MergedCoord{r, c});
    k = 0;
    for (int r = 0; r < 12; ++r)
      for (int c = 0; c < 12; ++c) REQUIRE(coords.global[k++] == MergedCoord{r, c});
  }
}

TEST_CASE("layout_to_grid reports the first bad index") {
  const auto good = assemble_layout(grid_plan(2, 4));
  auto index_of_error = [](const TokenLayout& l) -> std::size_t {
    try {
      layout_to_grid(l);
    } catch (const LayoutError& e) {
      return e.index();
    }
    return static_cast<std::size_t>(-1);
  };

  auto moved = good;
  std::swap(moved.tokens[156], moved.tokens[157]);
  CHECK(index_of_error(moved) == 156);

  auto no_newline = good;
  no_newline.tokens.erase(no_newline.tokens.begin() + 12);
  CHECK(index_of_error(no_newline) == 12);

  auto wrong_coord = good;
  wrong_coord.tokens[200].col += 1;
  CHECK(index_of_error(wrong_coord) == 200);

  auto short_stream = good;
  short_stream.tokens.pop_back();
  CHECK(index_of_error(short_stream) == good.tokens.size() - 1);

  auto long_stream = good;
  long_stream.tokens.push_back(TokenDescriptor::newline(0));
  CHECK(index_of_error(long_stream) == good.tokens.size());
}

TEST_CASE("reassemble_local places patches row-major") {
  const auto plan = grid_plan(3, 2);
  std::vector<FeatureGrid> patches;
  for (int k = 0; k < 6; ++k) {
    patches.emplace_back(12, 12, 1, std::vector<double>(144, static_cast<double>(k)));
  }
  const auto mosaic = reassemble_local(patches, plan);
  CHECK(mosaic.rows() == 24);
  CHECK(mosaic.cols() == 36);
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 36; ++c) REQUIRE(mosaic.at(r, c)[0] == (r / 12) * 3 + c / 12);
  patches.pop_back();
  CHECK_THROWS_AS(reassemble_local(patches, plan), InvalidArgument);
}

TEST_CASE("gather_features follows the stream") {
  const auto plan = grid_plan(1, 1);
  const auto layout = assemble_layout(plan);
  const auto global_map = iota_grid(12, 12, 2, 0.0);
  const auto local_map = iota_grid(12, 12, 2, 1000.0);
  const auto stream = gather_features(layout, global_map, local_map);
  REQUIRE(stream.size() == layout.tokens.size() * 2);
  CHECK(stream[0] == 0.0);
  CHECK(stream[12 * 2] == 0.0);           // newline row
  CHECK(stream[13 * 2] == 24.0);          // G 1 0
  CHECK(stream[157 * 2] == 1000.0);       // L 0 0
  CHECK(stream[156 * 2 + 1] == 0.0);      // separator
}

TEST_CASE("text form") {
  const auto layout = assemble_layout(grid_plan(2, 1));
  std::ifstream golden(HDTILE_GOLDEN_DIR "/layout_2x1.txt");
  REQUIRE(golden);
  std::stringstream buf;
  buf << golden.rdbuf();
  CHECK(to_text(layout) == buf.str());

  const auto parsed = parse_text(buf.str(), layout.plan);
  CHECK(parsed.tokens == layout.tokens);
  CHECK_NOTHROW(layout_to_grid(parsed));

  CHECK_THROWS_AS(parse_text("G 0 0\nBOGUS\n", layout.plan), LayoutError);
  CHECK_THROWS_AS(parse_text("G 0\n", layout.plan), LayoutError);
}
