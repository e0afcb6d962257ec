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

#include "hdtile/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <sstream>

#include "hdtile/error.hpp"
#include "hdtile/manifest.hpp"
#include "hdtile/schedule.hpp"
#include "hdtile/token_layout.hpp"

namespace hdtile::cli {
namespace {

// Text rows and columns drawn per patch in `viz`.
constexpr int kCellCols = 7;
constexpr int kCellRows = 4;

struct SettingFlags {
  std::optional<int> max_patches;
  std::optional<std::string> preset_name;

  void add_to(CLI::App& cmd) {
    auto* mp = cmd.add_option("--max-patches", max_patches, "Patch budget H")
                   ->check(CLI::PositiveNumber);
    auto* pr = cmd.add_option("--preset", preset_name, "HD9, HD16, HD25, HD30 or HD55");
    mp->excludes(pr);
  }

  bool given() const { return max_patches.has_value() || preset_name.has_value(); }

  // Name and setting; throws InvalidArgument if neither flag was given.
  std::pair<std::string, HdSetting> resolve() const {
    if (preset_name) {
      const HdSetting s = preset(*preset_name);
      return {s.name(), s};
    }
    if (max_patches) {
      const HdSetting s(*max_patches);
      return {s.name(), s};
    }
    throw InvalidArgument("one of --max-patches or --preset is required");
  }
};

SourceSpec parse_source(const std::string& text) {
  // name:count:bucket
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos || a == 0) {
    throw InvalidArgument("source '" + text + "' is not name:count:bucket");
  }
  SourceSpec s;
  s.name = text.substr(0, a);
  try {
    std::size_t used = 0;
    const std::string count = text.substr(a + 1, b - a - 1);
    s.sample_count = std::stoll(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::logic_error&) {
    throw InvalidArgument("source '" + text + "' has a non-integer count");
  }
  const std::string bucket = text.substr(b + 1);
  if (bucket == "HD25" || bucket == "HD-25") {
    s.bucket = Bucket::kHd25;
  } else if (bucket == "HD55" || bucket == "HD-55") {
    s.bucket = Bucket::kHd55;
  } else {
    throw InvalidArgument("source '" + text + "' has bucket '" + bucket +
                          "' (expected HD25 or HD55)");
  }
  return s;
}

}  // namespace

std::string render_plan(const PartitionPlan& plan, const std::string& setting_name) {
  std::ostringstream out;
  out << "plan " << plan.source_w << "x" << plan.source_h << " " << setting_name << " (max "
      << plan.max_patches << "): " << plan.p_w << " x " << plan.p_h << " patches, canvas "
      << plan.canvas_w << "x" << plan.canvas_h << ", resized " << plan.resized_w << "x"
      << plan.resized_h << ", pad " << plan.pad_bottom << (plan.clamped ? " [clamped]" : "")
      << "\n";

  std::string border = "+";
  for (int c = 0; c < plan.p_w; ++c) border += std::string(kCellCols, '-') + "+";

  const double px_per_line = static_cast<double>(kSubimagePx) / kCellRows;
  out << border << "\n";
  for (int r = 0; r < plan.p_h; ++r) {
    for (int line = 0; line < kCellRows; ++line) {
      const double center_y = r * kSubimagePx + (line + 0.5) * px_per_line;
      const char fill = center_y < plan.resized_h ? '.' : '#';
      out << "|";
      for (int c = 0; c < plan.p_w; ++c) out << std::string(kCellCols, fill) << "|";
      out << "\n";
    }
    out << border << "\n";
  }
  out << "legend: . image  # padding\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic-resolution image tiling and visual token accounting", "hdtile"};
  app.require_subcommand(1);

  // plan
  int plan_w = 0;
  int plan_h = 0;
  SettingFlags plan_setting;
  auto* plan_cmd = app.add_subcommand("plan", "Solve the patch grid for an image size");
  plan_cmd->add_option("--width", plan_w)->required()->check(CLI::PositiveNumber);
  plan_cmd->add_option("--height", plan_h)->required()->check(CLI::PositiveNumber);
  plan_setting.add_to(*plan_cmd);

  // tile
  std::string tile_input;
  std::string tile_preset;
  std::string tile_out;
  auto* tile_cmd = app.add_subcommand("tile", "Write global view, patches and manifest");
  tile_cmd->add_option("--input", tile_input, "PPM/PGM image")->required();
  tile_cmd->add_option("--preset", tile_preset)->required();
  tile_cmd->add_option("--out-dir", tile_out)->required();

  // tokens
  SettingFlags tok_setting;
  bool worst_case = false;
  std::optional<int> tok_pw;
  std::optional<int> tok_ph;
  std::optional<int> tok_w;
  std::optional<int> tok_h;
  auto* tok_cmd = app.add_subcommand("tokens", "Visual token count");
  tok_setting.add_to(*tok_cmd);
  tok_cmd->add_flag("--worst-case", worst_case, "Largest count the setting allows");
  tok_cmd->add_option("--pw", tok_pw, "Patch columns")->check(CLI::PositiveNumber);
  tok_cmd->add_option("--ph", tok_ph, "Patch rows")->check(CLI::PositiveNumber);
  tok_cmd->add_option("--width", tok_w)->check(CLI::PositiveNumber);
  tok_cmd->add_option("--height", tok_h)->check(CLI::PositiveNumber);

  // viz
  int viz_w = 0;
  int viz_h = 0;
  SettingFlags viz_setting;
  auto* viz_cmd = app.add_subcommand("viz", "ASCII rendering of the partition");
  viz_cmd->add_option("--width", viz_w)->required()->check(CLI::PositiveNumber);
  viz_cmd->add_option("--height", viz_h)->required()->check(CLI::PositiveNumber);
  viz_setting.add_to(*viz_cmd);

  // layout
  int lay_pw = 0;
  int lay_ph = 0;
  auto* lay_cmd = app.add_subcommand("layout", "Print the token stream, one token per line");
  lay_cmd->add_option("--pw", lay_pw)->required()->check(CLI::PositiveNumber);
  lay_cmd->add_option("--ph", lay_ph)->required()->check(CLI::PositiveNumber);

  // batches
  std::vector<std::string> batch_sources;
  int batch_steps = 0;
  int batch_size = 16;
  std::uint64_t batch_seed = 0;
  auto* batch_cmd = app.add_subcommand("batches", "Deterministic mixed-resolution batch plan");
  batch_cmd->add_option("--source", batch_sources, "name:count:HD25|HD55 (repeatable)")
      ->required();
  batch_cmd->add_option("--steps", batch_steps)->required()->check(CLI::PositiveNumber);
  batch_cmd->add_option("--batch", batch_size, "HD25 batch size; HD55 uses half")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch_cmd->add_option("--seed", batch_seed)->capture_default_str();

  std::vector<const char*> argv{"hdtile"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (plan_cmd->parsed()) {
      const auto [name, setting] = plan_setting.resolve();
      const PartitionPlan plan = plan_partition(plan_w, plan_h, setting);
      nlohmann::ordered_json doc{
          {"width", plan_w},
          {"height", plan_h},
          {"setting", {{"name", name}, {"max_patches", setting.max_patches()}}},
          {"plan", plan_to_json(plan)},
          {"token_count", token_count(plan.p_w, plan.p_h)}};
      out << doc.dump(2) << "\n";
    } else if (tile_cmd->parsed()) {
      const HdSetting setting = preset(tile_preset);
      const TileManifest m = write_tiles(tile_input, setting, setting.name(), tile_out);
      out << manifest_to_json(m).dump(2) << "\n";
    } else if (tok_cmd->parsed()) {
      const bool by_grid = tok_pw || tok_ph;
      const bool by_size = tok_w || tok_h;
      if (by_grid) {
        if (!tok_pw || !tok_ph) throw InvalidArgument("--pw and --ph go together");
        if (tok_setting.given() || worst_case || by_size) {
          throw InvalidArgument("--pw/--ph cannot be combined with a setting or size");
        }
        out << token_count(*tok_pw, *tok_ph) << "\n";
      } else if (worst_case) {
        if (by_size) throw InvalidArgument("--worst-case does not take --width/--height");
        out << max_token_count(tok_setting.resolve().second.max_patches()) << "\n";
      } else {
        if (!tok_w || !tok_h) {
          throw InvalidArgument("give --pw/--ph, --worst-case, or --width/--height");
        }
        const auto plan = plan_partition(*tok_w, *tok_h, tok_setting.resolve().second);
        out << token_count(plan.p_w, plan.p_h) << "\n";
      }
    } else if (viz_cmd->parsed()) {
      const auto [name, setting] = viz_setting.resolve();
      out << render_plan(plan_partition(viz_w, viz_h, setting), name);
    } else if (lay_cmd->parsed()) {
      PartitionPlan plan;
      plan.p_w = lay_pw;
      plan.p_h = lay_ph;
      out << to_text(assemble_layout(plan));
    } else if (batch_cmd->parsed()) {
      std::vector<SourceSpec> sources;
      for (const auto& s : batch_sources) sources.push_back(parse_source(s));
      out << to_json(plan_batches(sources, batch_steps, batch_size, batch_seed), 2) << "\n";
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace hdtile::cli
