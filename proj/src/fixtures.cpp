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

#include "scatterx/fixtures.hpp"

namespace scatterx::fixtures {

ProvisionTensor e_minus1() {
  IntTensor table(Shape{4, 2, 4}, {0, 0, 0, 0,  0, 0, 0, 1,
                                   0, 0, 1, 0,  0, 0, 1, 1,
                                   0, 1, 0, 0,  0, 1, 0, 1,
                                   0, 1, 1, 0,  0, 1, 1, 1});
  return ProvisionTensor(std::move(table), Shape{2, 2, 2, 2});
}

RealTensor a1() { return RealTensor(Shape{4, 2}, {1, 2, 3, 4, 5, 6, 7, 8}); }

RealTensor x1() { return RealTensor(Shape{2, 2, 2, 2}); }

RealTensor b1() {
  return RealTensor(Shape{2, 2, 2, 2}, {1, 2,  3, 4,    5, 6,  7, 8,
                                        0, 0,  0, 0,    0, 0,  0, 0});
}

ProvisionTensor e_minus2() {
  IntTensor table(Shape{2, 2, 2, 4}, {0, 0, 0, 0,  0, 0, 0, 1,
                                      0, 0, 1, 0,  0, 0, 1, 1,
                                      1, 1, 0, 0,  1, 1, 0, 1,
                                      1, 1, 1, 0,  1, 1, 1, 1});
  return ProvisionTensor(std::move(table), Shape{2, 2, 2, 2});
}

ProvisionTensor t_prime_minus2() {
  return ProvisionTensor(IntTensor(Shape{2, 2}, {0, 0, 1, 1}), Shape{2, 2});
}

XTransformerSpec e_minus2_spec() {
  return XTransformerSpec{
      .inner = t_prime_minus2(),
      .inner_pick = Pick{0},
      .pass_pick = Pick{1, 2},
      .out_pick = Pick::identity(4),
      .source_shape = Shape{2, 2, 2},
      .target_shape = Shape{2, 2, 2, 2},
  };
}

ProvisionTensor e3() {
  IntTensor table(Shape{4, 2, 4}, {0, 0, 0, 0,  0, 1, 0, 1,
                                   1, 0, 1, 0,  1, 1, 1, 1,
                                   2, 0, 0, 0,  2, 1, 0, 1,
                                   3, 0, 1, 0,  3, 1, 1, 1});
  return ProvisionTensor(std::move(table), Shape{4, 2, 2, 2});
}

}  // namespace scatterx::fixtures
