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

// Index transformers tabulated by provision tensors, and x-transformer
// composition `T(I) = out_pick(f(inner_pick(I)) + pass_pick(I))`.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scatterx/tensor.hpp"

namespace scatterx {

/// An integer tensor of shape `S1 + (L,)` read as the map
/// `I -> table[I, :]` from indices of S1 into indices of a rank-L target.
class ProvisionTensor {
 public:
  /// Throws ArgumentError unless the table's last extent equals the target rank.
  ProvisionTensor(IntTensor table, Shape target_shape);

  /// Target extents are taken as one past the largest entry on each axis.
  static ProvisionTensor with_inferred_target(IntTensor table);

  const IntTensor& table() const { return table_; }
  const Shape& source_shape() const { return source_shape_; }
  const Shape& target_shape() const { return target_shape_; }
  std::size_t target_rank() const { return target_shape_.rank(); }

  /// Throws IndexError when `index` is not valid for the source shape.
  Index transform(const Index& index) const;

  /// Row of the table at a flat source offset.
  std::span<const std::int64_t> row(std::int64_t source_flat) const {
    const auto rank = static_cast<std::int64_t>(target_rank());
    return table_.data().subspan(source_flat * rank, rank);
  }

  friend bool operator==(const ProvisionTensor&, const ProvisionTensor&) = default;

 private:
  IntTensor table_;
  Shape source_shape_;
  Shape target_shape_;
};

struct ValidationIssue {
  Index source;
  std::size_t axis;
  std::int64_t value;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Lists every (source index, axis) whose entry falls outside the target extents.
ValidationReport validate_provision(const ProvisionTensor& provision);

/// Throws ValidationError naming the first out-of-range entry.
void require_valid(const ProvisionTensor& provision);

/// Distinct transformed indices, sorted row-major.
std::vector<Index> image(const ProvisionTensor& provision);

/// Representation `T(I) = out_pick(inner(inner_pick(I)) + pass_pick(I))`.
struct XTransformerSpec {
  ProvisionTensor inner;
  Pick inner_pick;
  Pick pass_pick;
  Pick out_pick;
  Shape source_shape;
  Shape target_shape;

  friend bool operator==(const XTransformerSpec&, const XTransformerSpec&) = default;
};

/// Checks pick applicability (PickRangeError) and the out pick length (ArgumentError).
void check_spec(const XTransformerSpec& spec);

/// Tabulates the representation over every source index.
ProvisionTensor compose_provision(const XTransformerSpec& spec);

/// Transformer with `T(I) = I[0..dim) + (index[I],) + I[dim+1..)`, the
/// relocation performed by a framework-style `scatter(dim, index, src)`.
ProvisionTensor torch_transformer(const IntTensor& index, std::int64_t dim,
                                  const Shape& target_shape);

/// Representation of an nd-update: with `b = rank(indices) - 1` and
/// `Q = indices.shape[-1]`, source indices live in
/// `indices.shape[:-1] + target[Q:]` and `T(I) = indices[I[0..b)] + I[b..)`.
XTransformerSpec tf_transformer(const IntTensor& indices, const Shape& target_shape);

}  // namespace scatterx
