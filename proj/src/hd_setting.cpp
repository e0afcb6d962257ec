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

#include "hdtile/hd_setting.hpp"

#include "hdtile/error.hpp"

namespace hdtile {

HdSetting::HdSetting(int max_patches) : max_patches_(max_patches) {
  if (max_patches < 1) {
    throw InvalidArgument("max_patches must be >= 1, got " +
                          std::to_string(max_patches));
  }
}

std::string HdSetting::name() const { return "HD" + std::to_string(max_patches_); }

}  // namespace hdtile
