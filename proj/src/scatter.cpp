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

#include "scatterx/scatter.hpp"

#include <algorithm>

namespace scatterx {

std::string_view to_string(CollisionPolicy policy) {
  switch (policy) {
    case CollisionPolicy::Error:
      return "error";
    case CollisionPolicy::FirstWins:
      return "first";
    case CollisionPolicy::LastWins:
      return "last";
    case CollisionPolicy::Sum:
      return "sum";
    case CollisionPolicy::Prod:
      return "prod";
  }
  return "unknown";
}

CollisionPolicy parse_policy(std::string_view name) {
  for (CollisionPolicy policy : kAllPolicies) {
    if (to_string(policy) == name) return policy;
  }
  throw ArgumentError("unknown collision policy '" + std::string(name) +
                      "' (expected error, first, last, sum or prod)");
}

CollisionError::CollisionError(Index target)
    : Error("collision at target index " + to_string(target)), target_(std::move(target)) {}

namespace {

// Combines `count` previous writes at a cell with a new run of values.
template <CollisionPolicy P>
inline void combine(double* dst, const double* src, std::int64_t n, std::uint32_t count) {
  if constexpr (P == CollisionPolicy::LastWins || P == CollisionPolicy::Error) {
    std::copy(src, src + n, dst);
  } else if constexpr (P == CollisionPolicy::FirstWins) {
    if (count == 0) std::copy(src, src + n, dst);
  } else if constexpr (P == CollisionPolicy::Sum) {
    if (count == 0) {
      std::copy(src, src + n, dst);
    } else {
      for (std::int64_t i = 0; i < n; ++i) dst[i] += src[i];
    }
  } else {
    if (count == 0) {
      std::copy(src, src + n, dst);
    } else {
      for (std::int64_t i = 0; i < n; ++i) dst[i] *= src[i];
    }
  }
}

template <typename Fn>
decltype(auto) dispatch(CollisionPolicy policy, Fn&& fn) {
  switch (policy) {
    case CollisionPolicy::Error:
      return fn.template operator()<CollisionPolicy::Error>();
    case CollisionPolicy::FirstWins:
      return fn.template operator()<CollisionPolicy::FirstWins>();
    case CollisionPolicy::LastWins:
      return fn.template operator()<CollisionPolicy::LastWins>();
    case CollisionPolicy::Sum:
      return fn.template operator()<CollisionPolicy::Sum>();
    case CollisionPolicy::Prod:
      break;
  }
  return fn.template operator()<CollisionPolicy::Prod>();
}

}  // namespace

ScatterPlan::ScatterPlan(ProvisionTensor transformer)
    : transformer_(std::move(transformer)) {
  require_valid(transformer_);
  suffix_ = max_sliceable_suffix(transformer_);
}

ScatterResult ScatterPlan::run(const RealTensor& updates, const RealTensor& background,
                               CollisionPolicy policy, ExecutionPath path) const {
  if (!(updates.shape() == transformer_.source_shape())) {
    throw ArgumentError("updates have shape " + to_string(updates.shape()) +
                        " but the transformer reads source shape " +
                        to_string(transformer_.source_shape()));
  }
  if (!(background.shape() == transformer_.target_shape())) {
    throw ArgumentError("background has shape " + to_string(background.shape()) +
                        " but the transformer writes target shape " +
                        to_string(transformer_.target_shape()));
  }
  switch (path) {
    case ExecutionPath::Elementwise:
      return run_elementwise(updates, background, policy);
    case ExecutionPath::SliceCopy:
      if (suffix_.max_suffix < 1) {
        throw ArgumentError("slice-copy execution needs a sliceable transformer");
      }
      return run_slice_copy(updates, background, policy);
    case ExecutionPath::Auto:
      break;
  }
  if (suffix_.max_suffix >= 1) return run_slice_copy(updates, background, policy);
  return run_elementwise(updates, background, policy);
}

ScatterResult ScatterPlan::run_elementwise(const RealTensor& updates,
                                           const RealTensor& background,
                                           CollisionPolicy policy) const {
  const Shape& target = transformer_.target_shape();
  const std::int64_t rows = transformer_.source_shape().size();
  ScatterResult out{background, {}};
  std::vector<std::uint32_t> hits(target.size(), 0);
  const double* src = updates.data().data();
  double* dst = out.result.data().data();

  dispatch(policy, [&]<CollisionPolicy P>() {
    for (std::int64_t flat = 0; flat < rows; ++flat) {
      const std::int64_t t = target.offset(transformer_.row(flat));
      const std::uint32_t count = hits[t]++;
      if constexpr (P == CollisionPolicy::Error) {
        if (count > 0) throw CollisionError(target.unravel(t));
      }
      combine<P>(dst + t, src + flat, 1, count);
    }
  });

  for (std::uint32_t h : hits) {
    if (h > 0) ++out.report.writes;
    if (h > 1) ++out.report.colliding_groups;
  }
  out.report.uncovered_targets = target.size() - out.report.writes;
  return out;
}

// Copies one contiguous block of the trailing r source axes per leading
// source index. Different leading targets address disjoint blocks, so
// applying the policy block-by-block in leading order matches the
// element-wise order exactly.
ScatterResult ScatterPlan::run_slice_copy(const RealTensor& updates,
                                          const RealTensor& background,
                                          CollisionPolicy policy) const {
  const Shape& source = transformer_.source_shape();
  const Shape& target = transformer_.target_shape();
  const std::size_t k = source.rank();
  const std::size_t l = target.rank();
  const auto r = static_cast<std::size_t>(suffix_.max_suffix);
  const ProvisionTensor& inner = *suffix_.inner;

  ScatterResult out{background, {.fast_path_used = true}};
  out.report.uncovered_targets = target.size();
  if (source.size() == 0) return out;

  const std::int64_t lead_rows = source.segment(0, k - r).size();
  const std::int64_t block = source.segment(k - r, k).size();
  const std::int64_t target_block = target.segment(l - r, l).size();
  const std::vector<std::int64_t>& tstrides = target.strides();

  // Trailing suffix axes with equal extents are contiguous in both tensors,
  // along with the first mismatched axis above them.
  std::size_t matched = 0;
  while (matched < r && source[k - 1 - matched] == target[l - 1 - matched]) ++matched;
  const std::size_t outer_axes = matched == r ? 0 : r - 1 - matched;
  const Shape outer = source.segment(k - r, k - r + outer_axes);
  const std::int64_t run = block / outer.size();

  std::vector<std::int64_t> outer_offsets;  // target offset of each run within a block
  outer_offsets.reserve(outer.size());
  for (const Index& o : IndexSpace(outer)) {
    std::int64_t off = 0;
    for (std::size_t t = 0; t < outer_axes; ++t) off += o[t] * tstrides[l - r + t];
    outer_offsets.push_back(off);
  }

  std::vector<std::uint32_t> hits(target.size() / target_block, 0);
  const double* src = updates.data().data();
  double* dst = out.result.data().data();

  dispatch(policy, [&]<CollisionPolicy P>() {
    for (std::int64_t lead = 0; lead < lead_rows; ++lead) {
      const auto prefix = inner.row(lead);
      std::int64_t base = 0;
      for (std::size_t j = 0; j < l - r; ++j) base += prefix[j] * tstrides[j];
      const std::uint32_t count = hits[base / target_block]++;
      if constexpr (P == CollisionPolicy::Error) {
        if (count > 0) {
          Index at(std::vector<std::int64_t>(prefix.begin(), prefix.end()));
          throw CollisionError(at + Index::zeros(r));
        }
      }
      const double* block_src = src + lead * block;
      for (std::size_t o = 0; o < outer_offsets.size(); ++o) {
        combine<P>(dst + base + outer_offsets[o], block_src + static_cast<std::int64_t>(o) * run,
                   run, count);
      }
    }
  });

  for (std::uint32_t h : hits) {
    if (h > 0) out.report.writes += block;
    if (h > 1) out.report.colliding_groups += block;
  }
  out.report.uncovered_targets = target.size() - out.report.writes;
  return out;
}

ScatterResult scatter(const Scattering& scattering, CollisionPolicy policy, ExecutionPath path) {
  return ScatterPlan(scattering.transformer)
      .run(scattering.updates, scattering.background, policy, path);
}

ScatterResult scatter_x(const RealTensor& target, const RealTensor& updates,
                        const XTransformerSpec& spec, CollisionPolicy policy) {
  if (!(updates.shape() == spec.source_shape)) {
    throw ArgumentError("updates have shape " + to_string(updates.shape()) +
                        " but the spec's source shape is " + to_string(spec.source_shape));
  }
  if (!(target.shape() == spec.target_shape)) {
    throw ArgumentError("target has shape " + to_string(target.shape()) +
                        " but the spec's target shape is " + to_string(spec.target_shape));
  }
  return ScatterPlan(compose_provision(spec)).run(updates, target, policy);
}

ScatterResult scatter_nd_update(const RealTensor& ts, const IntTensor& indices,
                                const RealTensor& updates, CollisionPolicy policy) {
  const XTransformerSpec spec = tf_transformer(indices, ts.shape());
  if (!(updates.shape() == spec.source_shape)) {
    throw ArgumentError("updates have shape " + to_string(updates.shape()) + ", expected " +
                        to_string(spec.source_shape) + " for indices " +
                        to_string(indices.shape()) + " into " + to_string(ts.shape()));
  }
  return scatter_x(ts, updates, spec, policy);
}

ScatterResult torch_scatter(const RealTensor& self, std::int64_t dim, const IntTensor& index,
                            const RealTensor& src, CollisionPolicy policy) {
  ProvisionTensor transformer = torch_transformer(index, dim, self.shape());
  if (src.rank() != index.rank()) {
    throw ArgumentError("src rank " + std::to_string(src.rank()) + " differs from index rank " +
                        std::to_string(index.rank()));
  }
  std::vector<Pick> region;
  for (std::size_t axis = 0; axis < index.rank(); ++axis) {
    if (src.shape()[axis] < index.shape()[axis]) {
      throw ArgumentError("src shape " + to_string(src.shape()) +
                          " does not cover index shape " + to_string(index.shape()));
    }
    region.push_back(Pick::identity(index.shape()[axis]));
  }
  RealTensor updates = slice(src, std::span<const Pick>(region));
  return ScatterPlan(std::move(transformer)).run(updates, self, policy);
}

std::vector<Index> disseminate_slice(const ProvisionTensor& transformer, const Pick& pass_pick,
                                     const Index& origin) {
  std::vector<Index> footprint;
  for (const Index& k : index_class(transformer.source_shape(), pass_pick, origin)) {
    footprint.push_back(transformer.transform(k));
  }
  std::sort(footprint.begin(), footprint.end());
  footprint.erase(std::unique(footprint.begin(), footprint.end()), footprint.end());
  return footprint;
}

}  // namespace scatterx
