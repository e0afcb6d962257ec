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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdtile/hd_setting.hpp"
#include "hdtile/partition.hpp"

namespace hdtile {

// PartitionPlan <-> {"p_w", "p_h", "canvas_w", "canvas_h", "resized_w",
// "resized_h", "pad_bottom", "clamped"}. Source size and budget live one
// level up in the enclosing document.
nlohmann::ordered_json plan_to_json(const PartitionPlan& plan);
PartitionPlan plan_from_json(const nlohmann::json& j, int source_w, int source_h,
                             int max_patches);

// Output of `hdtile tile`. Paths are relative to the output directory (the
// source is recorded by file name only) so manifests stay machine-independent.
struct TileManifest {
  std::string source;
  int width = 0;
  int height = 0;
  std::string setting_name;
  int max_patches = 0;
  PartitionPlan plan;
  std::int64_t token_count = 0;
  std::vector<std::string> patch_files;
  std::string global_file;
};

nlohmann::ordered_json manifest_to_json(const TileManifest& m);
TileManifest manifest_from_json(const nlohmann::json& j);

// Reads `input`, tiles it under `setting` and writes global.ppm,
// patch_<row>_<col>.ppm and manifest.json into `out_dir` (created if needed).
TileManifest write_tiles(const std::filesystem::path& input, const HdSetting& setting,
                         const std::string& setting_name, const std::filesystem::path& out_dir);

}  // namespace hdtile
