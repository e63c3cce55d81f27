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

#include "scatterx/json_io.hpp"

#include <fstream>
#include <sstream>

namespace scatterx {

namespace {

template <typename T>
json tensor_json(const DenseTensor<T>& tensor, const char* dtype) {
  return json{{"dtype", dtype},
              {"shape", tensor.shape().dims()},
              {"data", std::vector<T>(tensor.data().begin(), tensor.data().end())}};
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::vector<std::int64_t> int_array(const json& doc, const char* what) {
  if (!doc.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(doc.size());
  for (const json& v : doc) {
    if (!v.is_number_integer()) {
      throw FormatError(std::string(what) + " must contain only integers, got " + v.dump());
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Shape checked_shape(const json& doc) {
  try {
    return Shape(int_array(doc, "shape"));
  } catch (const ArgumentError& e) {
    throw FormatError(e.what());
  }
}

template <typename T>
DenseTensor<T> make_tensor(Shape shape, std::vector<T> data) {
  if (static_cast<std::int64_t>(data.size()) != shape.size()) {
    throw FormatError("tensor of shape " + to_string(shape) + " needs " +
                      std::to_string(shape.size()) + " data values, got " +
                      std::to_string(data.size()));
  }
  return DenseTensor<T>(std::move(shape), std::move(data));
}

std::string dtype_of(const json& doc) {
  const json& dtype = field(doc, "dtype");
  if (!dtype.is_string()) throw FormatError("dtype must be a string");
  std::string name = dtype.get<std::string>();
  if (name != "f64" && name != "i64") throw FormatError("unsupported dtype '" + name + "'");
  return name;
}

}  // namespace

json to_json(const RealTensor& tensor) { return tensor_json(tensor, "f64"); }
json to_json(const IntTensor& tensor) { return tensor_json(tensor, "i64"); }
json to_json(const Shape& shape) { return shape.dims(); }
json to_json(const Index& index) { return index.vec(); }
json to_json(const Pick& pick) { return json{{"pick", pick.values()}}; }

json to_json(const XTransformerSpec& spec) {
  return json{{"inner", to_json(spec.inner.table())},
              {"inner_target_shape", to_json(spec.inner.target_shape())},
              {"inner_pick", spec.inner_pick.values()},
              {"pass_pick", spec.pass_pick.values()},
              {"out_pick", spec.out_pick.values()},
              {"source_shape", to_json(spec.source_shape)},
              {"target_shape", to_json(spec.target_shape)}};
}

json to_json(const ScatterReport& report) {
  return json{{"writes", report.writes},
              {"colliding_groups", report.colliding_groups},
              {"uncovered_targets", report.uncovered_targets},
              {"fast_path_used", report.fast_path_used}};
}

json to_json(const CollisionReport& report) {
  json groups = json::array();
  for (const CollisionGroup& g : report.groups) {
    json sources = json::array();
    for (const Index& s : g.sources) sources.push_back(to_json(s));
    groups.push_back(json{{"target", to_json(g.target)}, {"sources", sources}});
  }
  return json{{"count", report.groups.size()},
              {"groups", groups},
              {"image_size", report.image_size}};
}

json to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const ValidationIssue& issue : report.issues) {
    issues.push_back(
        json{{"source", to_json(issue.source)}, {"axis", issue.axis}, {"value", issue.value}});
  }
  return json{{"valid", report.ok()}, {"issues", issues}};
}

json analysis_to_json(const SlicingDiagnostic& diagnostic, const CollisionReport& collisions) {
  json pass_through = json::array();
  for (const auto& [i, j] : diagnostic.pass_through) pass_through.push_back(json::array({i, j}));
  json inner = nullptr;
  if (diagnostic.suffix.inner) inner = to_json(diagnostic.suffix.inner->table());
  return json{{"max_suffix", diagnostic.suffix.max_suffix},
              {"inner", inner},
              {"verdict", std::string(to_string(diagnostic.verdict))},
              {"pass_through", pass_through},
              {"collisions", to_json(collisions)},
              {"uncovered", collisions.uncovered_count},
              {"canonical", to_json(diagnostic.canonical)},
              {"overlap", diagnostic.overlap}};
}

Shape shape_from_json(const json& doc) { return checked_shape(doc); }

RealTensor real_tensor_from_json(const json& doc) {
  const std::string dtype = dtype_of(doc);
  Shape shape = checked_shape(field(doc, "shape"));
  const json& data = field(doc, "data");
  if (!data.is_array()) throw FormatError("data must be an array");
  std::vector<double> values;
  values.reserve(data.size());
  for (const json& v : data) {
    if (dtype == "i64" ? !v.is_number_integer() : !v.is_number()) {
      throw FormatError("data value " + v.dump() + " does not match dtype " + dtype);
    }
    values.push_back(v.get<double>());
  }
  return make_tensor(std::move(shape), std::move(values));
}

IntTensor int_tensor_from_json(const json& doc) {
  const std::string dtype = dtype_of(doc);
  if (dtype != "i64") throw FormatError("expected an i64 tensor, got dtype " + dtype);
  Shape shape = checked_shape(field(doc, "shape"));
  return make_tensor(std::move(shape), int_array(field(doc, "data"), "data"));
}

Pick pick_from_json(const json& doc) {
  const json& values = doc.is_object() ? field(doc, "pick") : doc;
  try {
    return Pick(int_array(values, "pick"));
  } catch (const PickRangeError& e) {
    throw FormatError(e.what());
  }
}

XTransformerSpec spec_from_json(const json& doc) {
  IntTensor table = int_tensor_from_json(field(doc, "inner"));
  ProvisionTensor inner =
      doc.contains("inner_target_shape")
          ? ProvisionTensor(std::move(table), checked_shape(doc.at("inner_target_shape")))
          : ProvisionTensor::with_inferred_target(std::move(table));
  return XTransformerSpec{
      .inner = std::move(inner),
      .inner_pick = pick_from_json(field(doc, "inner_pick")),
      .pass_pick = pick_from_json(field(doc, "pass_pick")),
      .out_pick = pick_from_json(field(doc, "out_pick")),
      .source_shape = checked_shape(field(doc, "source_shape")),
      .target_shape = checked_shape(field(doc, "target_shape")),
  };
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return json::parse(text.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw FormatError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw FormatError("cannot replace " + path.string());
  }
}

}  // namespace scatterx
