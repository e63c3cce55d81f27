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

// Static analysis of provision tensors: collisions and coverage, the
// maximal sliceable suffix, and the canonical weak (x-transformer)
// decomposition used to explain why a transformer cannot be sliced.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "scatterx/transformer.hpp"

namespace scatterx {

struct CollisionGroup {
  Index target;
  std::vector<Index> sources;  // row-major order, at least two
};

struct CollisionReport {
  std::vector<CollisionGroup> groups;  // sorted by target
  std::int64_t image_size = 0;
  std::int64_t uncovered_count = 0;
};

/// Groups source indices that share a target. Requires a valid provision.
CollisionReport detect_collisions(const ProvisionTensor& provision);

struct SuffixDecomposition {
  /// Largest r with T(I) = T'(I[0..k-r)) + I[k-r..k); zero means not sliceable.
  std::int64_t max_suffix = 0;
  /// T' tabulated over the leading k-r source axes, present when r >= 1.
  std::optional<ProvisionTensor> inner;
};

SuffixDecomposition max_sliceable_suffix(const ProvisionTensor& provision);

/// (input axis, output axis) with `T(I)[output] == I[input]` for every I.
using PassThroughPair = std::pair<std::size_t, std::size_t>;

/// Every pass-through pair, sorted. Extent-1 input axes match any output
/// that is constantly zero.
std::vector<PassThroughPair> pass_through_map(const ProvisionTensor& provision);

/// Canonical x-transformer representation. Composing the result reproduces
/// the provision table exactly.
XTransformerSpec weak_decomposition(const ProvisionTensor& provision);

enum class SliceVerdict {
  Sliceable,                // max_suffix >= 1
  WeaklySliceableOnly,      // r = 0 and the canonical picks overlap
  WeaklySliceableDisjoint,  // r = 0, pass-through present, disjoint picks
  TrivialOnly,              // r = 0, no pass-through axes
};

std::string_view to_string(SliceVerdict verdict);

struct SlicingDiagnostic {
  SuffixDecomposition suffix;
  std::vector<PassThroughPair> pass_through;
  XTransformerSpec canonical;
  /// Axes chosen by both the inner pick and the pass pick of `canonical`.
  std::vector<std::int64_t> overlap;
  SliceVerdict verdict;
};

/// The overlap witness is scoped to the canonical representation only.
SlicingDiagnostic slicing_impossibility(const ProvisionTensor& provision);

}  // namespace scatterx
