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

#include "hdtile/ppm.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "hdtile/error.hpp"

namespace hdtile {
namespace {

bool is_space(std::uint8_t b) {
  return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' || b == '\f';
}

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads a decimal field.
  long long read_uint(const char* field) {
    skip_separators();
    if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw DecodeError(std::string("malformed header: expected ") + field);
    }
    long long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw DecodeError(std::string("malformed header: ") + field + " too large");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void consume_single_space() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw DecodeError("malformed header: missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '6' && bytes[1] != '5')) {
    throw DecodeError("not a binary PPM/PGM file (expected P6 or P5 magic)");
  }
  if (bytes.size() < 3 || !(is_space(bytes[2]) || bytes[2] == '#')) {
    throw DecodeError("malformed header: no separator after magic");
  }
  const int channels = bytes[1] == '6' ? 3 : 1;
  HeaderReader header(bytes.subspan(2));
  const auto width = header.read_uint("width");
  const auto height = header.read_uint("height");
  const auto maxval = header.read_uint("maxval");
  if (width < 1 || height < 1) {
    throw DecodeError("malformed header: zero image dimension");
  }
  if (maxval != 255) {
    throw DecodeError("unsupported maxval " + std::to_string(maxval) + " (only 255)");
  }
  header.consume_single_space();

  const std::size_t offset = 2 + header.pos();
  const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() - offset < expected) {
    throw DecodeError("truncated payload: expected " + std::to_string(expected) +
                      " bytes, found " + std::to_string(bytes.size() - offset));
  }
  const auto raster = bytes.subspan(offset, expected);
  return ImageBuffer(static_cast<int>(width), static_cast<int>(height), channels,
                     std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> encode_ppm(const ImageBuffer& img) {
  const std::string header = std::string(img.channels() == 3 ? "P6" : "P5") + "\n" +
                             std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.data().begin(), img.data().end());
  return out;
}

ImageBuffer read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return decode_ppm(bytes);
}

void write_ppm(const std::filesystem::path& path, const ImageBuffer& img) {
  const auto bytes = encode_ppm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace hdtile
