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

// Times the element-wise and slice-copy scatter paths on a 2^20-element
// target and prints a JSON report.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>

#include "CLI11.hpp"
#include "scatterx/json_io.hpp"
#include "scatterx/scatter.hpp"

using namespace scatterx;

namespace {

double best_ms(const ScatterPlan& plan, const RealTensor& a, const RealTensor& x, ExecutionPath path,
               int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    plan.run(a, x, CollisionPolicy::LastWins, path);
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                              .count());
  }
  return best;
}

// Leading axis permuted, trailing two axes passed through.
json run_case(const std::string& name, const Shape& source, const Shape& target, int reps,
              std::mt19937_64& rng) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(source[0]));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntTensor table = IntTensor::generate(source + Shape{3}, [&](const Index& i) {
    return i[3] == 0 ? perm[static_cast<std::size_t>(i[0])] : i[static_cast<std::size_t>(i[3])];
  });
  const ScatterPlan plan(ProvisionTensor(std::move(table), target));
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  const RealTensor a = RealTensor::generate(source, [&](const Index&) { return value(rng); });
  const RealTensor x = RealTensor::generate(target, [&](const Index&) { return value(rng); });
  const double slow = best_ms(plan, a, x, ExecutionPath::Elementwise, reps);
  const double fast = best_ms(plan, a, x, ExecutionPath::SliceCopy, reps);
  const bool identical = plan.run(a, x, CollisionPolicy::LastWins, ExecutionPath::Elementwise).result ==
                         plan.run(a, x, CollisionPolicy::LastWins, ExecutionPath::SliceCopy).result;
  return {{"name", name},
          {"source_shape", to_json(source)},
          {"target_shape", to_json(target)},
          {"sliceable_suffix", plan.sliceable_suffix()},
          {"elementwise_ms", slow},
          {"slice_copy_ms", fast},
          {"speedup", slow / fast},
          {"identical", identical}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scatterx path benchmark"};
  int reps = 5;
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--reps", reps, "Repetitions per path; best time is reported")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--out", out, "Also write the report to this file");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  json report = {{"reps", reps}, {"policy", "last"}, {"cases", json::array()}};
  report["cases"].push_back(run_case("contiguous", Shape{64, 128, 128}, Shape{64, 128, 128}, reps, rng));
  report["cases"].push_back(run_case("strided", Shape{64, 128, 100}, Shape{64, 128, 128}, reps, rng));
  if (!out.empty()) write_json_file(out, report);
  std::cout << report.dump(2) << '\n';
  return 0;
}
