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

#include "scatterx/transformer.hpp"

#include <algorithm>

namespace scatterx {

namespace {

Shape leading_shape(const IntTensor& table) {
  if (table.rank() == 0) {
    throw ArgumentError("a provision table needs rank >= 1, got a rank-0 tensor");
  }
  return table.shape().segment(0, table.rank() - 1);
}

}  // namespace

ProvisionTensor::ProvisionTensor(IntTensor table, Shape target_shape)
    : table_(std::move(table)),
      source_shape_(leading_shape(table_)),
      target_shape_(std::move(target_shape)) {
  const std::int64_t last = table_.shape()[table_.rank() - 1];
  if (last != static_cast<std::int64_t>(target_shape_.rank())) {
    throw ArgumentError("provision table " + to_string(table_.shape()) + " has rows of length " +
                        std::to_string(last) + " but the target shape " +
                        to_string(target_shape_) + " has rank " +
                        std::to_string(target_shape_.rank()));
  }
}

ProvisionTensor ProvisionTensor::with_inferred_target(IntTensor table) {
  const Shape source = leading_shape(table);
  const auto rank = static_cast<std::size_t>(table.shape()[table.rank() - 1]);
  std::vector<std::int64_t> dims(rank, 0);
  const auto data = table.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    dims[i % rank] = std::max(dims[i % rank], data[i] + 1);
  }
  return ProvisionTensor(std::move(table), Shape(std::move(dims)));
}

Index ProvisionTensor::transform(const Index& index) const {
  if (!source_shape_.contains(index)) {
    throw IndexError("index " + to_string(index) + " is not valid for source shape " +
                     to_string(source_shape_));
  }
  const auto r = row(source_shape_.offset(index));
  return Index(std::vector<std::int64_t>(r.begin(), r.end()));
}

ValidationReport validate_provision(const ProvisionTensor& provision) {
  ValidationReport report;
  const Shape& target = provision.target_shape();
  const std::int64_t rows = provision.source_shape().size();
  for (std::int64_t flat = 0; flat < rows; ++flat) {
    const auto r = provision.row(flat);
    for (std::size_t axis = 0; axis < r.size(); ++axis) {
      if (r[axis] < 0 || r[axis] >= target[axis]) {
        report.issues.push_back({provision.source_shape().unravel(flat), axis, r[axis]});
      }
    }
  }
  return report;
}

void require_valid(const ProvisionTensor& provision) {
  const ValidationReport report = validate_provision(provision);
  if (report.ok()) return;
  const ValidationIssue& first = report.issues.front();
  throw ValidationError("provision maps " + to_string(first.source) + " to coordinate " +
                        std::to_string(first.value) + " on axis " + std::to_string(first.axis) +
                        ", outside target shape " + to_string(provision.target_shape()) + " (" +
                        std::to_string(report.issues.size()) + " out-of-range entries)");
}

std::vector<Index> image(const ProvisionTensor& provision) {
  std::vector<Index> out;
  const std::int64_t rows = provision.source_shape().size();
  out.reserve(rows);
  for (std::int64_t flat = 0; flat < rows; ++flat) {
    const auto r = provision.row(flat);
    out.emplace_back(std::vector<std::int64_t>(r.begin(), r.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_spec(const XTransformerSpec& spec) {
  const std::size_t k = spec.source_shape.rank();
  if (!spec.inner_pick.applicable_to(k)) {
    throw PickRangeError("inner pick " + to_string(spec.inner_pick) +
                         " does not apply to source indices of rank " + std::to_string(k));
  }
  if (!spec.pass_pick.applicable_to(k)) {
    throw PickRangeError("pass pick " + to_string(spec.pass_pick) +
                         " does not apply to source indices of rank " + std::to_string(k));
  }
  if (spec.inner_pick.size() != spec.inner.source_shape().rank()) {
    throw ArgumentError("inner pick " + to_string(spec.inner_pick) + " yields indices of length " +
                        std::to_string(spec.inner_pick.size()) + " but the inner transformer has " +
                        "source shape " + to_string(spec.inner.source_shape()));
  }
  const std::size_t joined = spec.inner.target_rank() + spec.pass_pick.size();
  if (!spec.out_pick.applicable_to(joined)) {
    throw PickRangeError("out pick " + to_string(spec.out_pick) +
                         " does not apply to joined indices of length " + std::to_string(joined));
  }
  if (spec.out_pick.size() != spec.target_shape.rank()) {
    throw ArgumentError("out pick " + to_string(spec.out_pick) + " has length " +
                        std::to_string(spec.out_pick.size()) + " but the target shape " +
                        to_string(spec.target_shape) + " has rank " +
                        std::to_string(spec.target_shape.rank()));
  }
}

ProvisionTensor compose_provision(const XTransformerSpec& spec) {
  check_spec(spec);
  const std::size_t out_rank = spec.target_shape.rank();
  const std::size_t inner_rank = spec.inner.target_rank();
  IntTensor table(spec.source_shape + Shape{static_cast<std::int64_t>(out_rank)});
  auto out = table.data();
  const Shape& inner_source = spec.inner.source_shape();

  std::vector<std::int64_t> inner_index(spec.inner_pick.size());
  std::vector<std::int64_t> joined(inner_rank + spec.pass_pick.size());
  std::int64_t flat = 0;
  for (const Index& index : IndexSpace(spec.source_shape)) {
    for (std::size_t j = 0; j < inner_index.size(); ++j) inner_index[j] = index[spec.inner_pick[j]];
    for (std::size_t j = 0; j < inner_index.size(); ++j) {
      if (inner_index[j] >= inner_source[j]) {
        throw IndexError("inner pick maps " + to_string(index) + " to " +
                         to_string(Index(inner_index)) + ", outside inner source shape " +
                         to_string(inner_source));
      }
    }
    const auto inner_row = spec.inner.row(inner_source.offset(inner_index));
    std::copy(inner_row.begin(), inner_row.end(), joined.begin());
    for (std::size_t j = 0; j < spec.pass_pick.size(); ++j) {
      joined[inner_rank + j] = index[spec.pass_pick[j]];
    }
    for (std::size_t j = 0; j < out_rank; ++j) out[flat * out_rank + j] = joined[spec.out_pick[j]];
    ++flat;
  }
  return ProvisionTensor(std::move(table), spec.target_shape);
}

ProvisionTensor torch_transformer(const IntTensor& index, std::int64_t dim,
                                  const Shape& target_shape) {
  const auto rank = static_cast<std::int64_t>(index.rank());
  if (dim < 0 || dim >= rank) {
    throw ArgumentError("dim " + std::to_string(dim) + " out of range for an index of rank " +
                        std::to_string(rank));
  }
  if (index.rank() != target_shape.rank()) {
    throw ArgumentError("index rank " + std::to_string(index.rank()) +
                        " differs from target rank " + std::to_string(target_shape.rank()));
  }
  IntTensor table(index.shape() + Shape{rank});
  auto out = table.data();
  std::int64_t flat = 0;
  for (const Index& i : IndexSpace(index.shape())) {
    for (std::int64_t axis = 0; axis < rank; ++axis) out[flat * rank + axis] = i[axis];
    out[flat * rank + dim] = index.data()[flat];
    ++flat;
  }
  ProvisionTensor provision(std::move(table), target_shape);
  require_valid(provision);
  return provision;
}

XTransformerSpec tf_transformer(const IntTensor& indices, const Shape& target_shape) {
  if (indices.rank() < 1) throw ArgumentError("indices must have rank >= 1");
  const std::size_t batch_rank = indices.rank() - 1;
  const std::int64_t depth = indices.shape()[batch_rank];
  if (depth > static_cast<std::int64_t>(target_shape.rank())) {
    throw ArgumentError("index depth " + std::to_string(depth) + " exceeds target rank " +
                        std::to_string(target_shape.rank()));
  }
  const auto q = static_cast<std::size_t>(depth);
  ProvisionTensor inner(indices, target_shape.segment(0, q));
  require_valid(inner);

  const Shape source = indices.shape().segment(0, batch_rank) +
                       target_shape.segment(q, target_shape.rank());
  return XTransformerSpec{
      .inner = std::move(inner),
      .inner_pick = Pick::range(0, static_cast<std::int64_t>(batch_rank)),
      .pass_pick = Pick::range(static_cast<std::int64_t>(batch_rank),
                               static_cast<std::int64_t>(source.rank())),
      .out_pick = Pick::identity(static_cast<std::int64_t>(target_shape.rank())),
      .source_shape = source,
      .target_shape = target_shape,
  };
}

}  // namespace scatterx
