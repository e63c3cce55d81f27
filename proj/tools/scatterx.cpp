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

// Command-line front end. Every invocation prints exactly one JSON document
// on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 validation or argument
// error, 3 collision under --policy error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scatterx/analysis.hpp"
#include "scatterx/fixtures.hpp"
#include "scatterx/json_io.hpp"
#include "scatterx/scatter.hpp"

namespace fs = std::filesystem;
using namespace scatterx;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCollision = 3;

struct Options {
  std::string provision, updates, background, policy = "last", out;
  bool in_place = false;
  std::string tensor, indices;
  std::string self, index, src;
  std::int64_t dim = 0;
  std::string target_shape;
  std::string spec;
  std::string dir;
};

Shape parse_shape_list(const std::string& text) {
  std::vector<std::int64_t> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad extent '" + item + "' in --target-shape");
    }
  }
  return Shape(std::move(dims));
}

// Writes the result tensor to --out when given, otherwise inlines it.
json emit_result(const ScatterResult& result, const std::string& out_path) {
  json doc{{"report", to_json(result.report)}};
  if (out_path.empty()) {
    doc["result"] = to_json(result.result);
  } else {
    write_json_file(out_path, to_json(result.result));
    doc["out"] = out_path;
  }
  return doc;
}

json cmd_scatter(const Options& opt) {
  IntTensor table = int_tensor_from_json(read_json_file(opt.provision));
  const RealTensor updates = real_tensor_from_json(read_json_file(opt.updates));
  const RealTensor background = real_tensor_from_json(read_json_file(opt.background));
  const CollisionPolicy policy = parse_policy(opt.policy);

  Scattering scattering{ProvisionTensor(std::move(table), background.shape()), updates,
                        background};
  const ScatterResult result = scatter(scattering, policy);
  // The background file is only replaced after the scatter succeeded.
  return emit_result(result, opt.in_place ? opt.background : opt.out);
}

json cmd_tf_scatter(const Options& opt) {
  const RealTensor tensor = real_tensor_from_json(read_json_file(opt.tensor));
  const IntTensor indices = int_tensor_from_json(read_json_file(opt.indices));
  const RealTensor updates = real_tensor_from_json(read_json_file(opt.updates));
  return emit_result(scatter_nd_update(tensor, indices, updates, parse_policy(opt.policy)),
                     opt.out);
}

json cmd_torch_scatter(const Options& opt) {
  const RealTensor self = real_tensor_from_json(read_json_file(opt.self));
  const IntTensor index = int_tensor_from_json(read_json_file(opt.index));
  const RealTensor src = real_tensor_from_json(read_json_file(opt.src));
  return emit_result(torch_scatter(self, opt.dim, index, src, parse_policy(opt.policy)),
                     opt.out);
}

json cmd_analyze(const Options& opt) {
  IntTensor table = int_tensor_from_json(read_json_file(opt.provision));
  const ProvisionTensor provision =
      opt.target_shape.empty()
          ? ProvisionTensor::with_inferred_target(std::move(table))
          : ProvisionTensor(std::move(table), parse_shape_list(opt.target_shape));
  const CollisionReport collisions = detect_collisions(provision);
  json doc = analysis_to_json(slicing_impossibility(provision), collisions);
  doc["target_shape"] = to_json(provision.target_shape());
  return doc;
}

json cmd_compose(const Options& opt) {
  const ProvisionTensor composed = compose_provision(spec_from_json(read_json_file(opt.spec)));
  if (opt.out.empty()) return to_json(composed.table());
  write_json_file(opt.out, to_json(composed.table()));
  return json{{"out", opt.out}, {"shape", to_json(composed.table().shape())}};
}

json cmd_fixtures(const Options& opt) {
  const fs::path dir(opt.dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, json>> files = {
      {"e_minus1.json", to_json(fixtures::e_minus1().table())},
      {"a1.json", to_json(fixtures::a1())},
      {"x1.json", to_json(fixtures::x1())},
      {"b1.json", to_json(fixtures::b1())},
      {"e_minus2.json", to_json(fixtures::e_minus2().table())},
      {"t_prime_minus2.json", to_json(fixtures::t_prime_minus2().table())},
      {"e_minus2_spec.json", to_json(fixtures::e_minus2_spec())},
      {"e3.json", to_json(fixtures::e3().table())},
      {"tf_tensor.json", to_json(RealTensor(Shape{3, 2}))},
      {"tf_indices.json", to_json(IntTensor(Shape{2, 1}, {0, 2}))},
      {"tf_updates.json", to_json(RealTensor(Shape{2, 2}, {1, 2, 3, 4}))},
      {"torch_self.json", to_json(RealTensor(Shape{2, 2}))},
      {"torch_index.json", to_json(IntTensor(Shape{2, 2}, {0, 1, 1, 0}))},
      {"torch_src.json", to_json(RealTensor(Shape{2, 2}, {1, 2, 3, 4}))},
  };
  json written = json::array();
  for (const auto& [name, doc] : files) {
    write_json_file(dir / name, doc);
    written.push_back(name);
  }
  return json{{"dir", opt.dir}, {"files", written}};
}

int report_error(const char* kind, const std::string& message, int code) {
  std::cerr << "scatterx: " << message << '\n';
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor scatter engine and sliceability analyzer"};
  app.require_subcommand(1);
  Options opt;
  std::function<json(const Options&)> handler;

  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--policy", opt.policy, "error|first|last|sum|prod")->capture_default_str();
    cmd->add_option("--out", opt.out, "Write the result tensor to this file");
  };

  CLI::App* scatter_cmd = app.add_subcommand("scatter", "Scatter updates through a provision tensor");
  scatter_cmd->add_option("--provision", opt.provision)->required();
  scatter_cmd->add_option("--updates", opt.updates)->required();
  scatter_cmd->add_option("--background", opt.background)->required();
  add_policy(scatter_cmd);
  scatter_cmd->add_flag("--in-place", opt.in_place, "Replace the background file with the result");
  scatter_cmd->callback([&] { handler = cmd_scatter; });

  CLI::App* tf_cmd = app.add_subcommand("tf-scatter", "nd-update: rows of indices address leading axes");
  tf_cmd->add_option("--tensor", opt.tensor)->required();
  tf_cmd->add_option("--indices", opt.indices)->required();
  tf_cmd->add_option("--updates", opt.updates)->required();
  add_policy(tf_cmd);
  tf_cmd->callback([&] { handler = cmd_tf_scatter; });

  CLI::App* torch_cmd = app.add_subcommand("torch-scatter", "dim-scatter of src along one axis");
  torch_cmd->add_option("--self", opt.self)->required();
  torch_cmd->add_option("--dim", opt.dim)->required();
  torch_cmd->add_option("--index", opt.index)->required();
  torch_cmd->add_option("--src", opt.src)->required();
  add_policy(torch_cmd);
  torch_cmd->callback([&] { handler = cmd_torch_scatter; });

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Collision, coverage and sliceability report");
  analyze_cmd->add_option("--provision", opt.provision)->required();
  analyze_cmd->add_option("--target-shape", opt.target_shape, "Comma-separated extents");
  analyze_cmd->callback([&] { handler = cmd_analyze; });

  CLI::App* compose_cmd = app.add_subcommand("compose", "Tabulate an x-transformer spec");
  compose_cmd->add_option("--spec", opt.spec)->required();
  compose_cmd->add_option("--out", opt.out);
  compose_cmd->callback([&] { handler = cmd_compose; });

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Write the worked-example tensors");
  fixtures_cmd->add_option("--dir", opt.dir)->required();
  fixtures_cmd->callback([&] { handler = cmd_fixtures; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error("argument", e.what(), kExitInvalid);
  }

  try {
    std::cout << handler(opt).dump() << '\n';
    return 0;
  } catch (const CollisionError& e) {
    return report_error("collision", e.what(), kExitCollision);
  } catch (const FormatError& e) {
    return report_error("io", e.what(), kExitIo);
  } catch (const fs::filesystem_error& e) {
    return report_error("io", e.what(), kExitIo);
  } catch (const Error& e) {
    return report_error("invalid", e.what(), kExitInvalid);
  }
}
