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

#include <ostream>
#include <string>
#include <vector>

#include "hdtile/partition.hpp"

namespace hdtile::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDecode = 3;
inline constexpr int kExitIo = 4;

// Runs the `hdtile` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ASCII drawing of a plan: one cell per patch, '.' for image rows and '#'
// for the padding band.
std::string render_plan(const PartitionPlan& plan, const std::string& setting_name);

}  // namespace hdtile::cli
