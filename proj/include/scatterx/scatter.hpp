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

// Executes scatterings (transformer, updates, background) with explicit
// collision policies, plus the nd-update and dim-scatter adapters.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "scatterx/analysis.hpp"
#include "scatterx/transformer.hpp"

namespace scatterx {

/// How several updates landing on one target cell combine. First/last are
/// relative to row-major order over the source shape; Sum and Prod reduce
/// the updates only, without the background value.
enum class CollisionPolicy { Error, FirstWins, LastWins, Sum, Prod };

inline constexpr CollisionPolicy kAllPolicies[] = {
    CollisionPolicy::Error, CollisionPolicy::FirstWins, CollisionPolicy::LastWins,
    CollisionPolicy::Sum, CollisionPolicy::Prod};

std::string_view to_string(CollisionPolicy policy);
/// Accepts error|first|last|sum|prod; throws ArgumentError otherwise.
CollisionPolicy parse_policy(std::string_view name);

/// Raised under CollisionPolicy::Error at the first target written twice.
class CollisionError : public Error {
 public:
  explicit CollisionError(Index target);
  const Index& target() const { return target_; }

 private:
  Index target_;
};

struct Scattering {
  ProvisionTensor transformer;
  RealTensor updates;     // shape = transformer source shape
  RealTensor background;  // shape = transformer target shape
};

struct ScatterReport {
  std::int64_t writes = 0;  // distinct target cells written
  std::int64_t colliding_groups = 0;
  std::int64_t uncovered_targets = 0;
  bool fast_path_used = false;

  friend bool operator==(const ScatterReport&, const ScatterReport&) = default;
};

struct ScatterResult {
  RealTensor result;
  ScatterReport report;
};

enum class ExecutionPath {
  Auto,         // slice copies when the transformer has a sliceable suffix
  Elementwise,  // one table lookup per source element
  SliceCopy,    // requires a sliceable suffix; ArgumentError otherwise
};

/// A validated transformer with its sliceable-suffix analysis cached, for
/// running many scatters through the same transformer.
class ScatterPlan {
 public:
  /// Throws ValidationError when the transformer leaves its target shape.
  explicit ScatterPlan(ProvisionTensor transformer);

  const ProvisionTensor& transformer() const { return transformer_; }
  std::int64_t sliceable_suffix() const { return suffix_.max_suffix; }

  ScatterResult run(const RealTensor& updates, const RealTensor& background,
                    CollisionPolicy policy = CollisionPolicy::LastWins,
                    ExecutionPath path = ExecutionPath::Auto) const;

 private:
  ScatterResult run_elementwise(const RealTensor& updates, const RealTensor& background,
                                CollisionPolicy policy) const;
  ScatterResult run_slice_copy(const RealTensor& updates, const RealTensor& background,
                               CollisionPolicy policy) const;

  ProvisionTensor transformer_;
  SuffixDecomposition suffix_;
};

ScatterResult scatter(const Scattering& scattering,
                      CollisionPolicy policy = CollisionPolicy::LastWins,
                      ExecutionPath path = ExecutionPath::Auto);

/// Scatter through a composed x-transformer representation.
ScatterResult scatter_x(const RealTensor& target, const RealTensor& updates,
                        const XTransformerSpec& spec,
                        CollisionPolicy policy = CollisionPolicy::LastWins);

/// nd-update: rows of `indices` address leading axes of `ts`; `updates`
/// has shape `indices.shape[:-1] + ts.shape[Q:]`.
ScatterResult scatter_nd_update(const RealTensor& ts, const IntTensor& indices,
                                const RealTensor& updates,
                                CollisionPolicy policy = CollisionPolicy::LastWins);

/// dim-scatter: `out[I with I[dim] = index[I]] = src[I]` for I over index.shape.
/// Only the index.shape region of `src` is read.
ScatterResult torch_scatter(const RealTensor& self, std::int64_t dim, const IntTensor& index,
                            const RealTensor& src,
                            CollisionPolicy policy = CollisionPolicy::LastWins);

/// Target footprint of the source cell `index_class(S1, pass_pick, origin)`.
std::vector<Index> disseminate_slice(const ProvisionTensor& transformer, const Pick& pass_pick,
                                     const Index& origin);

}  // namespace scatterx
