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
#include <span>
#include <vector>

namespace hdtile {

// Dense rows x cols x channels grid of feature values, row-major with
// channels innermost.
class FeatureGrid {
 public:
  FeatureGrid(int rows, int cols, int channels);
  FeatureGrid(int rows, int cols, int channels, std::vector<double> values);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int channels() const noexcept { return channels_; }

  std::span<const double> at(int r, int c) const noexcept {
    return std::span<const double>(values_).subspan(offset(r, c), channels_);
  }
  std::span<double> at(int r, int c) noexcept {
    return std::span<double>(values_).subspan(offset(r, c), channels_);
  }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const FeatureGrid&, const FeatureGrid&) = default;

 private:
  std::size_t offset(int r, int c) const noexcept {
    return (static_cast<std::size_t>(r) * cols_ + c) * channels_;
  }

  int rows_;
  int cols_;
  int channels_;
  std::vector<double> values_;
};

}  // namespace hdtile
