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

#include <filesystem>
#include <random>
#include <string>

#include "hdtile/error.hpp"
#include "hdtile/ppm.hpp"
#include "test_support.hpp"

using namespace hdtile;
using namespace std::string_literals;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("decode minimal P6") {
  const auto img = decode_ppm(bytes_of(std::string("P6\n1 1\n255\n") + "\xff\x00\x00"s));
  CHECK(img == ImageBuffer(1, 1, 3, {255, 0, 0}));
}

TEST_CASE("decode P5 with header comments") {
  const auto img = decode_ppm(bytes_of("P5 # gray\n# size next\n2 2\n255\n" + std::string("\x01\x02\x03\x04")));
  CHECK(img.channels() == 1);
  CHECK(img.width() == 2);
  CHECK(img.height() == 2);
  CHECK(img.at(1, 1, 0) == 4);
}

TEST_CASE("encode writes the minimal header") {
  const auto bytes = encode_ppm(ImageBuffer(2, 1, 1, {7, 8}));
  CHECK(std::string(bytes.begin(), bytes.end()) == "P5\n2 1\n255\n\x07\x08");
}

TEST_CASE("round trip is lossless") {
  std::mt19937_64 rng(1);
  const auto img = testing::random_image(rng, 17, 13, 3);
  CHECK(decode_ppm(encode_ppm(img)) == img);
  for (int i = 0; i < 25; ++i) {
    const auto other = testing::random_image(rng, 1 + i * 7 % 41, 1 + i * 11 % 29, i % 2 ? 1 : 3);
    REQUIRE(decode_ppm(encode_ppm(other)) == other);
  }
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(decode_ppm(bytes_of("")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P3\n1 1\n255\n0 0 0")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\n1\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\nx 1\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\n0 1\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\n1 1\n65535\n\0\0\0\0\0\0")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\n2 2\n255\n\1\2\3")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P6\n1 1\n255")), DecodeError);
  CHECK_THROWS_AS(decode_ppm(bytes_of("P61 1\n255\n\0\0\0")), DecodeError);
}

TEST_CASE("file wrappers") {
  const auto dir = std::filesystem::temp_directory_path() / "hdtile_test_ppm";
  std::filesystem::create_directories(dir);
  const ImageBuffer img(3, 2, 3, std::vector<std::uint8_t>(18, 42));
  write_ppm(dir / "a.ppm", img);
  CHECK(read_ppm(dir / "a.ppm") == img);
  CHECK_THROWS_AS(read_ppm(dir / "missing.ppm"), IoError);
  CHECK_THROWS_AS(write_ppm(dir / "no_such_dir" / "b.ppm", img), IoError);
  std::filesystem::remove_all(dir);
}
