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

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "hdtile/error.hpp"
#include "hdtile/image.hpp"
#include "hdtile/partition.hpp"
#include "hdtile/schedule.hpp"
#include "hdtile/token_layout.hpp"

namespace py = pybind11;

namespace {

py::bytes to_bytes(const hdtile::ImageBuffer& img) {
  const auto data = img.data();
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

hdtile::Bucket parse_bucket(const std::string& name) {
  if (name == "HD25" || name == "HD-25") return hdtile::Bucket::kHd25;
  if (name == "HD55" || name == "HD-55") return hdtile::Bucket::kHd55;
  throw hdtile::InvalidArgument("bucket must be HD25 or HD55, got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_hdtile, m) {
  m.doc() = "Dynamic-resolution image tiling and visual token accounting";

  py::register_exception<hdtile::DecodeError>(m, "DecodeError");

  py::class_<hdtile::PartitionPlan>(m, "PartitionPlan")
      .def_readonly("source_w", &hdtile::PartitionPlan::source_w)
      .def_readonly("source_h", &hdtile::PartitionPlan::source_h)
      .def_readonly("max_patches", &hdtile::PartitionPlan::max_patches)
      .def_readonly("p_w", &hdtile::PartitionPlan::p_w)
      .def_readonly("p_h", &hdtile::PartitionPlan::p_h)
      .def_readonly("canvas_w", &hdtile::PartitionPlan::canvas_w)
      .def_readonly("canvas_h", &hdtile::PartitionPlan::canvas_h)
      .def_readonly("resized_w", &hdtile::PartitionPlan::resized_w)
      .def_readonly("resized_h", &hdtile::PartitionPlan::resized_h)
      .def_readonly("pad_bottom", &hdtile::PartitionPlan::pad_bottom)
      .def_readonly("clamped", &hdtile::PartitionPlan::clamped)
      .def("patch_count", &hdtile::PartitionPlan::patch_count)
      .def("to_dict",
           [](const hdtile::PartitionPlan& p) {
             py::dict d;
             d["p_w"] = p.p_w;
             d["p_h"] = p.p_h;
             d["canvas_w"] = p.canvas_w;
             d["canvas_h"] = p.canvas_h;
             d["resized_w"] = p.resized_w;
             d["resized_h"] = p.resized_h;
             d["pad_bottom"] = p.pad_bottom;
             d["clamped"] = p.clamped;
             return d;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const hdtile::PartitionPlan& p) {
        return "PartitionPlan(p_w=" + std::to_string(p.p_w) + ", p_h=" + std::to_string(p.p_h) +
               ", canvas=" + std::to_string(p.canvas_w) + "x" + std::to_string(p.canvas_h) +
               ", pad_bottom=" + std::to_string(p.pad_bottom) + ")";
      });

  m.def(
      "plan",
      [](int width, int height, int max_patches) {
        return hdtile::plan_partition(width, height, hdtile::HdSetting(max_patches));
      },
      py::arg("width"), py::arg("height"), py::arg("max_patches"),
      "Solve the patch grid for an image of the given size.");

  m.def(
      "tile",
      [](py::buffer buffer, int width, int height, int channels, int max_patches) {
        const py::buffer_info info = buffer.request();
        if (info.itemsize != 1 || !PyBuffer_IsContiguous(info.view(), 'C')) {
          throw hdtile::InvalidArgument("buffer must be a contiguous byte buffer");
        }
        const auto* first = static_cast<const std::uint8_t*>(info.ptr);
        std::vector<std::uint8_t> data(first, first + info.size);
        hdtile::PatchSet set = [&] {
          py::gil_scoped_release release;
          const hdtile::ImageBuffer img(width, height, channels, std::move(data));
          return hdtile::tile_image(img, hdtile::HdSetting(max_patches));
        }();
        py::list patches;
        for (const auto& p : set.local_patches) patches.append(to_bytes(p));
        return py::make_tuple(to_bytes(set.global_view), patches, set.plan);
      },
      py::arg("buffer"), py::arg("width"), py::arg("height"), py::arg("channels"),
      py::arg("max_patches"),
      "Tile an interleaved HxWxC uint8 buffer. Returns (global, patches, plan).");

  m.def("token_count", &hdtile::token_count, py::arg("p_w"), py::arg("p_h"));
  m.def("max_token_count", &hdtile::max_token_count, py::arg("max_patches"));

  m.def(
      "plan_batches_json",
      [](const std::vector<std::tuple<std::string, std::int64_t, std::string>>& sources,
         int steps, int batch_hd25, std::uint64_t seed) {
        std::vector<hdtile::SourceSpec> specs;
        for (const auto& [name, count, bucket] : sources) {
          specs.push_back({name, count, parse_bucket(bucket)});
        }
        return hdtile::to_json(hdtile::plan_batches(specs, steps, batch_hd25, seed));
      },
      py::arg("sources"), py::arg("steps"), py::arg("batch_hd25") = 16, py::arg("seed") = 0);
}
