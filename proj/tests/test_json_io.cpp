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

#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "scatterx/fixtures.hpp"
#include "scatterx/json_io.hpp"

using namespace scatterx;

TEST_CASE("tensor json layout") {
  const json doc = to_json(IntTensor(Shape{3}, {4, 6, 7}));
  CHECK(doc.dump() == R"({"data":[4,6,7],"dtype":"i64","shape":[3]})");
  CHECK(to_json(RealTensor(Shape{2}, {1, 0.5})).dump() ==
        R"({"data":[1.0,0.5],"dtype":"f64","shape":[2]})");
  CHECK(to_json(Pick{4, 6, 7}).dump() == R"({"pick":[4,6,7]})");
}

TEST_CASE("tensor round trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Shape shape(oracle::random_dims(rng, 0, 4, 4, 0));
    const RealTensor real(shape, oracle::random_values(rng, shape.size()));
    CHECK(real_tensor_from_json(json::parse(to_json(real).dump())) == real);
    const IntTensor ints = IntTensor::generate(shape, [&](const Index&) {
      return std::uniform_int_distribution<std::int64_t>(-1000000, 1000000)(rng);
    });
    CHECK(int_tensor_from_json(json::parse(to_json(ints).dump())) == ints);
  }
}

TEST_CASE("tensor parse errors") {
  CHECK_THROWS_AS(real_tensor_from_json(json::parse(R"({"dtype":"f64","shape":[2],"data":[1]})")),
                  FormatError);
  CHECK_THROWS_AS(real_tensor_from_json(json::parse(R"({"dtype":"f32","shape":[1],"data":[1]})")),
                  FormatError);
  CHECK_THROWS_AS(real_tensor_from_json(json::parse(R"({"shape":[1],"data":[1]})")), FormatError);
  CHECK_THROWS_AS(int_tensor_from_json(json::parse(R"({"dtype":"f64","shape":[1],"data":[1]})")),
                  FormatError);
  CHECK_THROWS_AS(int_tensor_from_json(json::parse(R"({"dtype":"i64","shape":[1],"data":[1.5]})")),
                  FormatError);
  CHECK_THROWS_AS(int_tensor_from_json(json::parse(R"({"dtype":"i64","shape":[-1],"data":[]})")),
                  FormatError);
  CHECK_THROWS_AS(real_tensor_from_json(json::parse("[1,2]")), FormatError);

  // i64 data widens into a real tensor.
  CHECK(real_tensor_from_json(json::parse(R"({"dtype":"i64","shape":[2],"data":[1,2]})")) ==
        RealTensor(Shape{2}, {1, 2}));
}

TEST_CASE("picks and specs") {
  CHECK(pick_from_json(json::parse(R"({"pick":[1,2]})")) == Pick{1, 2});
  CHECK(pick_from_json(json::parse("[0]")) == Pick{0});
  CHECK_THROWS_AS(pick_from_json(json::parse("[-1]")), FormatError);

  const XTransformerSpec spec = fixtures::e_minus2_spec();
  CHECK(spec_from_json(json::parse(to_json(spec).dump())) == spec);

  json bare = to_json(spec);
  bare.erase("inner_target_shape");
  CHECK(spec_from_json(bare).inner.target_shape() == Shape{2, 2});
  bare.erase("out_pick");
  CHECK_THROWS_AS(spec_from_json(bare), FormatError);
}

TEST_CASE("analysis document") {
  const ProvisionTensor e3 = fixtures::e3();
  const json doc = analysis_to_json(slicing_impossibility(e3), detect_collisions(e3));
  CHECK(doc["max_suffix"] == 0);
  CHECK(doc["verdict"] == "WEAKLY_SLICEABLE_ONLY");
  CHECK(doc["overlap"] == json::array({0}));
  CHECK(doc["pass_through"] == json::parse("[[0,0],[1,1],[1,3]]"));
  CHECK(doc["uncovered"] == 24);
  CHECK(doc["inner"].is_null());
  CHECK(doc["collisions"]["count"] == 0);
  CHECK(compose_provision(spec_from_json(doc["canonical"])) == e3);

  const ProvisionTensor e2 = fixtures::e_minus2();
  const json doc2 = analysis_to_json(slicing_impossibility(e2), detect_collisions(e2));
  CHECK(int_tensor_from_json(doc2["inner"]) == fixtures::t_prime_minus2().table());
}

TEST_CASE("json files") {
  const auto dir = std::filesystem::temp_directory_path() / "scatterx_json_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "t.json";
  write_json_file(path, to_json(fixtures::b1()));
  CHECK(real_tensor_from_json(read_json_file(path)) == fixtures::b1());
  CHECK_FALSE(std::filesystem::exists(dir / "t.json.tmp"));
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), FormatError);
  {
    std::ofstream(dir / "bad.json") << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(dir / "bad.json"), FormatError);
  CHECK_THROWS_AS(write_json_file(dir / "no" / "such" / "dir.json", json{}), FormatError);
  std::filesystem::remove_all(dir);
}
