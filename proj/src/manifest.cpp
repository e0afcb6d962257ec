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

#include "hdtile/manifest.hpp"

#include <fstream>

#include "hdtile/error.hpp"
#include "hdtile/image.hpp"
#include "hdtile/ppm.hpp"
#include "hdtile/token_layout.hpp"

namespace hdtile {

nlohmann::ordered_json plan_to_json(const PartitionPlan& plan) {
  return {{"p_w", plan.p_w},
          {"p_h", plan.p_h},
          {"canvas_w", plan.canvas_w},
          {"canvas_h", plan.canvas_h},
          {"resized_w", plan.resized_w},
          {"resized_h", plan.resized_h},
          {"pad_bottom", plan.pad_bottom},
          {"clamped", plan.clamped}};
}

PartitionPlan plan_from_json(const nlohmann::json& j, int source_w, int source_h,
                             int max_patches) {
  PartitionPlan plan;
  plan.source_w = source_w;
  plan.source_h = source_h;
  plan.max_patches = max_patches;
  j.at("p_w").get_to(plan.p_w);
  j.at("p_h").get_to(plan.p_h);
  j.at("canvas_w").get_to(plan.canvas_w);
  j.at("canvas_h").get_to(plan.canvas_h);
  j.at("resized_w").get_to(plan.resized_w);
  j.at("resized_h").get_to(plan.resized_h);
  j.at("pad_bottom").get_to(plan.pad_bottom);
  j.at("clamped").get_to(plan.clamped);
  return plan;
}

nlohmann::ordered_json manifest_to_json(const TileManifest& m) {
  return {{"source", m.source},
          {"width", m.width},
          {"height", m.height},
          {"setting", {{"name", m.setting_name}, {"max_patches", m.max_patches}}},
          {"plan", plan_to_json(m.plan)},
          {"token_count", m.token_count},
          {"patch_files", m.patch_files},
          {"global_file", m.global_file}};
}

TileManifest manifest_from_json(const nlohmann::json& j) {
  TileManifest m;
  j.at("source").get_to(m.source);
  j.at("width").get_to(m.width);
  j.at("height").get_to(m.height);
  j.at("setting").at("name").get_to(m.setting_name);
  j.at("setting").at("max_patches").get_to(m.max_patches);
  m.plan = plan_from_json(j.at("plan"), m.width, m.height, m.max_patches);
  j.at("token_count").get_to(m.token_count);
  j.at("patch_files").get_to(m.patch_files);
  j.at("global_file").get_to(m.global_file);
  return m;
}

TileManifest write_tiles(const std::filesystem::path& input, const HdSetting& setting,
                         const std::string& setting_name, const std::filesystem::path& out_dir) {
  const ImageBuffer img = read_ppm(input);
  const PatchSet tiles = tile_image(img, setting);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  TileManifest m;
  m.source = input.filename().string();
  m.width = img.width();
  m.height = img.height();
  m.setting_name = setting_name;
  m.max_patches = setting.max_patches();
  m.plan = tiles.plan;
  m.token_count = token_count(tiles.plan.p_w, tiles.plan.p_h);
  m.global_file = "global.ppm";
  write_ppm(out_dir / m.global_file, tiles.global_view);
  for (int k = 0; k < tiles.plan.patch_count(); ++k) {
    const std::string name = "patch_" + std::to_string(k / tiles.plan.p_w) + "_" +
                             std::to_string(k % tiles.plan.p_w) + ".ppm";
    write_ppm(out_dir / name, tiles.local_patches[k]);
    m.patch_files.push_back(name);
  }

  const auto path = out_dir / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << manifest_to_json(m).dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
  return m;
}

}  // namespace hdtile
