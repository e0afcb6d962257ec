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

#include "hdtile/schedule.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <numeric>

#include "hdtile/error.hpp"
#include "hdtile/rng.hpp"

namespace hdtile {
namespace {

struct Preset {
  const char* name;
  int max_patches;
};

constexpr std::array<Preset, 5> kPresets{{
    {"HD9", 9}, {"HD16", 16}, {"HD25", 25}, {"HD30", 30}, {"HD55", 55}}};

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

std::size_t bucket_slot(Bucket b) { return b == Bucket::kHd25 ? 0 : 1; }

}  // namespace

HdSetting preset(std::string_view name) {
  std::string key(name);
  if (key.size() > 3 && key.compare(0, 3, "HD-") == 0) key.erase(2, 1);
  for (const auto& p : kPresets) {
    if (key == p.name) return HdSetting(p.max_patches);
  }
  throw InvalidArgument("unknown preset '" + std::string(name) +
                        "' (expected one of HD9, HD16, HD25, HD30, HD55)");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

int native_patch_count(int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  // Narrowest grid whose canvas width reaches the native width; the ceiling
  // on rows then covers the native height as well.
  const std::int64_t cols = ceil_div(width, kSubimagePx);
  const std::int64_t rows = ceil_div(cols * height, width);
  return static_cast<int>(std::min<std::int64_t>(cols * rows, kMixedResolutionCap));
}

HdSetting sample_mixed_resolution(int width, int height, std::uint64_t seed) {
  const int lo = native_patch_count(width, height);
  const std::uint64_t key = (static_cast<std::uint64_t>(width) << 32) |
                            static_cast<std::uint32_t>(height);
  SplitMix64 rng(seed ^ splitmix64_mix(key));
  const auto span = static_cast<std::uint64_t>(kMixedResolutionCap - lo + 1);
  return HdSetting(lo + static_cast<int>(rng.next_below(span)));
}

std::string_view bucket_name(Bucket bucket) {
  return bucket == Bucket::kHd25 ? "HD25" : "HD55";
}

std::vector<double> normalized_weights(const std::vector<SourceSpec>& sources) {
  std::int64_t total = 0;
  for (const auto& s : sources) total += s.sample_count;
  std::vector<double> out;
  out.reserve(sources.size());
  for (const auto& s : sources) {
    out.push_back(static_cast<double>(s.sample_count) / static_cast<double>(total));
  }
  return out;
}

BatchPlan plan_batches(const std::vector<SourceSpec>& sources, int steps, int batch_hd25,
                       std::uint64_t seed) {
  if (sources.empty()) throw InvalidArgument("plan_batches needs at least one source");
  if (steps < 1) throw InvalidArgument("steps must be >= 1, got " + std::to_string(steps));
  if (batch_hd25 < 1) {
    throw InvalidArgument("batch size must be >= 1, got " + std::to_string(batch_hd25));
  }
  for (const auto& s : sources) {
    if (s.sample_count < 1) {
      throw InvalidArgument("source '" + s.name + "' has sample_count " +
                            std::to_string(s.sample_count) + " (must be >= 1)");
    }
  }

  BatchPlan plan;
  plan.sources = sources;
  plan.batch_size_hd25 = batch_hd25;
  plan.batch_size_hd55 = std::max(1, batch_hd25 / 2);
  plan.seed = seed;

  // Per-bucket member indices and cumulative sample counts.
  std::array<std::vector<int>, 2> members;
  std::array<std::vector<std::int64_t>, 2> cumulative;
  for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
    const std::size_t b = bucket_slot(sources[i].bucket);
    const std::int64_t prev = cumulative[b].empty() ? 0 : cumulative[b].back();
    members[b].push_back(i);
    cumulative[b].push_back(prev + sources[i].sample_count);
  }
  std::array<double, 2> bucket_weight{};
  for (const Bucket b : {Bucket::kHd25, Bucket::kHd55}) {
    const std::size_t k = bucket_slot(b);
    if (!cumulative[k].empty()) {
      bucket_weight[k] =
          static_cast<double>(cumulative[k].back()) / static_cast<double>(plan.batch_size(b));
    }
  }
  const double total_weight = bucket_weight[0] + bucket_weight[1];

  SplitMix64 rng(seed);
  plan.steps.reserve(steps);
  for (int step = 0; step < steps; ++step) {
    const Bucket bucket = (bucket_weight[1] > 0.0 &&
                           (bucket_weight[0] == 0.0 ||
                            rng.next_unit() * total_weight >= bucket_weight[0]))
                              ? Bucket::kHd55
                              : Bucket::kHd25;
    const std::size_t k = bucket_slot(bucket);
    const auto& cum = cumulative[k];
    BatchStep batch{bucket, {}};
    batch.draws.reserve(plan.batch_size(bucket));
    for (int slot = 0; slot < plan.batch_size(bucket); ++slot) {
      const auto r = static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(cum.back())));
      const auto it = std::upper_bound(cum.begin(), cum.end(), r);
      batch.draws.push_back(members[k][static_cast<std::size_t>(it - cum.begin())]);
    }
    plan.steps.push_back(std::move(batch));
  }
  return plan;
}

std::string to_json(const BatchPlan& plan, int indent) {
  nlohmann::ordered_json doc;
  doc["seed"] = plan.seed;
  doc["batch_sizes"] = {{"HD25", plan.batch_size_hd25}, {"HD55", plan.batch_size_hd55}};
  auto& steps = doc["steps"] = nlohmann::ordered_json::array();
  for (const auto& step : plan.steps) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const int i : step.draws) names.push_back(plan.sources[i].name);
    steps.push_back({{"bucket", bucket_name(step.bucket)}, {"sources", std::move(names)}});
  }
  return doc.dump(indent);
}

}  // namespace hdtile
