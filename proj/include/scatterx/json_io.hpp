/* Copyright 2026 The ScatterX Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// JSON encodings for tensors, picks, x-transformer specs and reports.
//
// Tensors: {"dtype": "f64" | "i64", "shape": [...], "data": [... row-major ...]}
// Picks:   {"pick": [...]}

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "scatterx/analysis.hpp"
#include "scatterx/scatter.hpp"

namespace scatterx {

using json = nlohmann::json;

json to_json(const RealTensor& tensor);
json to_json(const IntTensor& tensor);
json to_json(const Shape& shape);
json to_json(const Index& index);
json to_json(const Pick& pick);
json to_json(const XTransformerSpec& spec);
json to_json(const ScatterReport& report);
json to_json(const CollisionReport& report);
json to_json(const ValidationReport& report);

/// Full analysis document: suffix, verdict, pass-through pairs,
/// collisions, coverage, canonical spec and overlap.
json analysis_to_json(const SlicingDiagnostic& diagnostic, const CollisionReport& collisions);

// Parsers throw FormatError on schema violations.
Shape shape_from_json(const json& doc);
/// Accepts both dtypes; i64 data is widened.
RealTensor real_tensor_from_json(const json& doc);
/// Requires dtype i64.
IntTensor int_tensor_from_json(const json& doc);
/// Accepts {"pick": [...]} or a bare array.
Pick pick_from_json(const json& doc);
/// The inner transformer's target shape is read from "inner_target_shape"
/// when present and inferred from the inner table otherwise.
XTransformerSpec spec_from_json(const json& doc);

/// Reads and parses a JSON file; FormatError on missing file or bad JSON.
json read_json_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_json_file(const std::filesystem::path& path, const json& doc);

}  // namespace scatterx
