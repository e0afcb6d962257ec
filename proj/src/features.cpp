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

#include "hdtile/features.hpp"

#include <string>

#include "hdtile/error.hpp"

namespace hdtile {
namespace {

std::size_t checked_size(int rows, int cols, int channels) {
  if (rows < 1 || cols < 1 || channels < 1) {
    throw InvalidArgument("feature grid dimensions must be positive, got " +
                          std::to_string(rows) + "x" + std::to_string(cols) + "x" +
                          std::to_string(channels));
  }
  return static_cast<std::size_t>(rows) * cols * channels;
}

}  // namespace

FeatureGrid::FeatureGrid(int rows, int cols, int channels)
    : rows_(rows), cols_(cols), channels_(channels),
      values_(checked_size(rows, cols, channels), 0.0) {}

FeatureGrid::FeatureGrid(int rows, int cols, int channels, std::vector<double> values)
    : rows_(rows), cols_(cols), channels_(channels), values_(std::move(values)) {
  if (values_.size() != checked_size(rows, cols, channels)) {
    throw InvalidArgument("feature grid holds " + std::to_string(values_.size()) +
                          " values, expected " +
                          std::to_string(checked_size(rows, cols, channels)));
  }
}

}  // namespace hdtile
