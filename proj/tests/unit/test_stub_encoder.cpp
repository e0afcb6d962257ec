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

#include <random>

#include "hdtile/error.hpp"
#include "hdtile/stub_encoder.hpp"
#include "test_support.hpp"

using namespace hdtile;

TEST_CASE("constant patch") {
  const auto grid = encode_stub(ImageBuffer(336, 336, 3), 0);
  CHECK(grid.rows() == 24);
  CHECK(grid.cols() == 24);
  CHECK(grid.channels() == 4);
  const double h0 = grid.at(0, 0)[kStubContentHash];
  CHECK(h0 >= 0.0);
  CHECK(h0 < 1.0);
  for (int r = 0; r < 24; ++r) {
    for (int c = 0; c < 24; ++c) {
      const auto f = grid.at(r, c);
      REQUIRE(f[kStubPatchIndex] == 0.0);
      REQUIRE(f[kStubRow] == r);
      REQUIRE(f[kStubCol] == c);
      REQUIRE(f[kStubContentHash] == h0);
    }
  }
}

TEST_CASE("one changed pixel changes exactly one token") {
  std::mt19937_64 rng(9);
  const auto base = testing::random_image(rng, 336, 336, 3);
  const auto ref = encode_stub(base, 0);
  std::uniform_int_distribution<int> pos(0, 335);
  for (int trial = 0; trial < 40; ++trial) {
    auto img = base;
    const int x = pos(rng);
    const int y = pos(rng);
    const int c = trial % 3;
    img.at(x, y, c) = static_cast<std::uint8_t>(img.at(x, y, c) ^ (1 + trial % 255));
    const auto out = encode_stub(img, 0);
    int changed = 0;
    for (int r = 0; r < 24; ++r) {
      for (int col = 0; col < 24; ++col) {
        if (out.at(r, col)[kStubContentHash] != ref.at(r, col)[kStubContentHash]) {
          ++changed;
          REQUIRE(r == y / 14);
          REQUIRE(col == x / 14);
        }
      }
    }
    REQUIRE(changed == 1);
  }
}

TEST_CASE("patch index only touches channel 0") {
  std::mt19937_64 rng(4);
  const auto img = testing::random_image(rng, 336, 336, 1);
  const auto a = encode_stub(img, 3);
  const auto b = encode_stub(img, 7);
  for (int r = 0; r < 24; ++r) {
    for (int c = 0; c < 24; ++c) {
      REQUIRE(a.at(r, c)[0] == 3.0);
      REQUIRE(b.at(r, c)[0] == 7.0);
      for (int ch = 1; ch < 4; ++ch) REQUIRE(a.at(r, c)[ch] == b.at(r, c)[ch]);
    }
  }
}

TEST_CASE("wrong size is rejected") {
  CHECK_THROWS_AS(encode_stub(ImageBuffer(335, 336, 3), 0), InvalidArgument);
}
