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

#include <doctest.h>

#include "cli_harness.hpp"
#include "scatterx/fixtures.hpp"

using namespace scatterx;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir = cli::scratch("scatterx_cli_test");
  Workspace() { REQUIRE(cli::run("fixtures --dir " + dir.string()).exit_code == 0); }
  ~Workspace() { fs::remove_all(dir); }

  std::string operator()(const std::string& name) const { return (dir / name).string(); }

  void put(const std::string& name, const json& doc) const { write_json_file(dir / name, doc); }
};

}  // namespace

TEST_CASE("fixtures are written deterministically") {
  Workspace ws;
  const fs::path again = cli::scratch("scatterx_cli_test_again");
  REQUIRE(cli::run("fixtures --dir " + again.string()).exit_code == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(ws.dir)) {
    CHECK(cli::slurp(entry.path()) == cli::slurp(again / entry.path().filename()));
    ++files;
  }
  CHECK(files == 14);
  fs::remove_all(again);

  const IntTensor e3 = int_tensor_from_json(read_json_file(ws("e3.json")));
  CHECK(e3.shape() == Shape{4, 2, 4});
  CHECK(subtensor(e3, Index{3, 1}) == IntTensor(Shape{4}, {3, 1, 1, 1}));

  // Re-running over an existing directory is fine.
  CHECK(cli::run("fixtures --dir " + ws.dir.string()).exit_code == 0);
}

TEST_CASE("scatter command") {
  Workspace ws;
  const std::string base = "scatter --provision " + ws("e_minus1.json") + " --updates " +
                           ws("a1.json") + " --background " + ws("x1.json");

  const cli::Outcome out = cli::run(base + " --policy last --out " + ws("result.json"));
  REQUIRE(out.exit_code == 0);
  const json report = out.doc()["report"];
  CHECK(report["writes"] == 8);
  CHECK(report["colliding_groups"] == 0);
  CHECK(report["uncovered_targets"] == 8);
  CHECK(real_tensor_from_json(read_json_file(ws("result.json"))) == fixtures::b1());

  const cli::Outcome inline_out = cli::run(base);
  REQUIRE(inline_out.exit_code == 0);
  CHECK(real_tensor_from_json(inline_out.doc()["result"]) == fixtures::b1());

  CHECK(cli::run(base + " --policy bogus").exit_code == 2);
  CHECK(cli::run(base + " --frobnicate").exit_code == 2);
  CHECK(cli::run("scatter --provision " + ws("nope.json") + " --updates " + ws("a1.json") +
                 " --background " + ws("x1.json"))
            .exit_code == 1);
  CHECK(cli::run("scatter --provision " + ws("e_minus1.json") + " --updates " + ws("x1.json") +
                 " --background " + ws("x1.json"))
            .exit_code == 2);
}

TEST_CASE("collisions and validation through the CLI") {
  Workspace ws;
  ws.put("dup.json", to_json(IntTensor(Shape{2, 1}, {0, 0})));
  ws.put("u.json", to_json(RealTensor(Shape{2}, {10, 20})));
  ws.put("bg.json", to_json(RealTensor(Shape{1}, {0})));
  const std::string base =
      "scatter --provision " + ws("dup.json") + " --updates " + ws("u.json") + " --background " +
      ws("bg.json");

  const cli::Outcome collision = cli::run(base + " --policy error");
  CHECK(collision.exit_code == 3);
  CHECK(collision.doc()["error"]["kind"] == "collision");
  CHECK(real_tensor_from_json(cli::run(base + " --policy sum").doc()["result"]) ==
        RealTensor(Shape{1}, {30}));

  ws.put("oob.json", to_json(IntTensor(Shape{2, 1}, {0, 1})));
  CHECK(cli::run("scatter --provision " + ws("oob.json") + " --updates " + ws("u.json") +
                 " --background " + ws("bg.json"))
            .exit_code == 2);

  SUBCASE("in-place only replaces the background on success") {
    const std::string before = cli::slurp(ws("bg.json"));
    CHECK(cli::run(base + " --policy error --in-place").exit_code == 3);
    CHECK(cli::slurp(ws("bg.json")) == before);
    CHECK(cli::run(base + " --policy first --in-place").exit_code == 0);
    CHECK(real_tensor_from_json(read_json_file(ws("bg.json"))) == RealTensor(Shape{1}, {10}));
  }
}

TEST_CASE("adapter commands") {
  Workspace ws;
  const cli::Outcome tf = cli::run("tf-scatter --tensor " + ws("tf_tensor.json") + " --indices " +
                                   ws("tf_indices.json") + " --updates " + ws("tf_updates.json"));
  REQUIRE(tf.exit_code == 0);
  CHECK(real_tensor_from_json(tf.doc()["result"]) == RealTensor(Shape{3, 2}, {1, 2, 0, 0, 3, 4}));

  const std::string torch = "torch-scatter --self " + ws("torch_self.json") + " --index " +
                            ws("torch_index.json") + " --src " + ws("torch_src.json");
  const cli::Outcome t = cli::run(torch + " --dim 0");
  REQUIRE(t.exit_code == 0);
  CHECK(real_tensor_from_json(t.doc()["result"]) == RealTensor(Shape{2, 2}, {1, 4, 3, 2}));
  CHECK(cli::run(torch + " --dim 5").exit_code == 2);
  CHECK(cli::run(torch).exit_code == 2);  // --dim is required

  CHECK(cli::run("tf-scatter --tensor " + ws("tf_tensor.json") + " --indices " +
                 ws("tf_updates.json") + " --updates " + ws("tf_updates.json"))
            .exit_code == 1);  // f64 indices
}

TEST_CASE("analyze command") {
  Workspace ws;
  const cli::Outcome e2 = cli::run("analyze --provision " + ws("e_minus2.json"));
  REQUIRE(e2.exit_code == 0);
  CHECK(e2.doc()["verdict"] == "SLICEABLE");
  CHECK(e2.doc()["max_suffix"] == 2);
  CHECK(int_tensor_from_json(e2.doc()["inner"]) == IntTensor(Shape{2, 2}, {0, 0, 1, 1}));

  const cli::Outcome e3 = cli::run("analyze --provision " + ws("e3.json"));
  REQUIRE(e3.exit_code == 0);
  CHECK(e3.doc()["verdict"] == "WEAKLY_SLICEABLE_ONLY");
  CHECK(e3.doc()["overlap"] == json::array({0}));

  const cli::Outcome e1 = cli::run("analyze --provision " + ws("e_minus1.json") +
                                   " --target-shape 2,2,2,2");
  REQUIRE(e1.exit_code == 0);
  CHECK(e1.doc()["uncovered"] == 8);
  CHECK(cli::run("analyze --provision " + ws("e_minus1.json") + " --target-shape 2,2,2,1")
            .exit_code == 2);
  CHECK(cli::run("analyze --provision " + ws("e_minus1.json") + " --target-shape 2,x")
            .exit_code == 2);

  {
    std::ofstream(ws.dir / "broken.json") << "{\"dtype\": ";
  }
  const cli::Outcome broken = cli::run("analyze --provision " + ws("broken.json"));
  CHECK(broken.exit_code == 1);
  CHECK(broken.doc().contains("error"));
}

TEST_CASE("compose command") {
  Workspace ws;
  const cli::Outcome e2 = cli::run("compose --spec " + ws("e_minus2_spec.json"));
  REQUIRE(e2.exit_code == 0);
  CHECK(int_tensor_from_json(e2.doc()) == fixtures::e_minus2().table());

  const ProvisionTensor e1 = fixtures::e_minus1();
  ws.put("trivial.json", to_json(XTransformerSpec{e1, Pick::identity(2), Pick{}, Pick::identity(4),
                                                  Shape{4, 2}, Shape{2, 2, 2, 2}}));
  CHECK(cli::run("compose --spec " + ws("trivial.json") + " --out " + ws("c.json")).exit_code == 0);
  CHECK(int_tensor_from_json(read_json_file(ws("c.json"))) == e1.table());

  json bad = to_json(fixtures::e_minus2_spec());
  bad["out_pick"] = json::array({0, 1, 2});
  ws.put("bad.json", bad);
  CHECK(cli::run("compose --spec " + ws("bad.json")).exit_code == 2);
}

TEST_CASE("fixtures into an unwritable location") {
  Workspace ws;
  const cli::Outcome out = cli::run("fixtures --dir " + ws("a1.json") + "/sub");
  CHECK(out.exit_code == 1);
  CHECK(out.doc()["error"]["kind"] == "io");
}
