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

// Small worked-example tensors, spelled out literally so they can be
// audited by eye against their printed form.

#pragma once

#include "scatterx/transformer.hpp"

namespace scatterx::fixtures {

/// Shape (4,2,4): row (i,j) is the 4-bit binary expansion of 2i+j.
ProvisionTensor e_minus1();
/// Updates of shape (4,2): 1..8.
RealTensor a1();
/// Zero background of shape (2,2,2,2).
RealTensor x1();
/// Result of scattering a1() through e_minus1() into x1().
RealTensor b1();

/// Shape (2,2,2,4): T(i,j,k) = (i,i,j,k). Sliceable with a suffix of 2.
ProvisionTensor e_minus2();
/// The prefix transformer of e_minus2(): [[0,0],[1,1]].
ProvisionTensor t_prime_minus2();
/// e_minus2() as an x-transformer over t_prime_minus2().
XTransformerSpec e_minus2_spec();

/// Shape (4,2,4): T(i,j) = (i, j, i mod 2, j). Weakly sliceable only.
ProvisionTensor e3();

}  // namespace scatterx::fixtures
