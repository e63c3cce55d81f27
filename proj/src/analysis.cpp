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

#include "scatterx/analysis.hpp"

#include <algorithm>
#include <iterator>

namespace scatterx {

CollisionReport detect_collisions(const ProvisionTensor& provision) {
  require_valid(provision);
  const Shape& source = provision.source_shape();
  const Shape& target = provision.target_shape();

  std::vector<std::pair<std::int64_t, std::int64_t>> hits;  // (target flat, source flat)
  hits.reserve(source.size());
  for (std::int64_t flat = 0; flat < source.size(); ++flat) {
    hits.emplace_back(target.offset(provision.row(flat)), flat);
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  CollisionReport report;
  for (std::size_t lo = 0; lo < hits.size();) {
    std::size_t hi = lo;
    while (hi < hits.size() && hits[hi].first == hits[lo].first) ++hi;
    ++report.image_size;
    if (hi - lo >= 2) {
      CollisionGroup group{target.unravel(hits[lo].first), {}};
      for (std::size_t i = lo; i < hi; ++i) group.sources.push_back(source.unravel(hits[i].second));
      report.groups.push_back(std::move(group));
    }
    lo = hi;
  }
  report.uncovered_count = target.size() - report.image_size;
  return report;
}

namespace {

// Tabulates the leading L-r output coordinates over the leading k-r input
// axes, or returns nothing if they are not a function of those axes.
std::optional<ProvisionTensor> tabulate_prefix(const ProvisionTensor& provision, std::size_t r) {
  const Shape& source = provision.source_shape();
  const std::size_t k = source.rank();
  const std::size_t out_lead = provision.target_rank() - r;
  const Shape lead = source.segment(0, k - r);
  const std::int64_t block = source.segment(k - r, k).size();

  IntTensor table(lead + Shape{static_cast<std::int64_t>(out_lead)});
  std::vector<bool> seen(lead.size(), false);
  auto out = table.data();
  for (std::int64_t flat = 0; flat < source.size(); ++flat) {
    const std::int64_t l = flat / block;
    const auto row = provision.row(flat);
    auto dst = out.subspan(l * out_lead, out_lead);
    if (!seen[l]) {
      std::copy(row.begin(), row.begin() + out_lead, dst.begin());
      seen[l] = true;
    } else if (!std::equal(dst.begin(), dst.end(), row.begin())) {
      return std::nullopt;
    }
  }
  return ProvisionTensor(std::move(table),
                         provision.target_shape().segment(0, out_lead));
}

}  // namespace

SuffixDecomposition max_sliceable_suffix(const ProvisionTensor& provision) {
  const Shape& source = provision.source_shape();
  const std::size_t k = source.rank();
  const std::size_t l = provision.target_rank();
  const std::size_t limit = std::min(k, l);

  // Longest run of trailing output coordinates copied from the aligned
  // trailing input coordinates.
  std::vector<bool> aligned(limit, true);
  for (const Index& index : IndexSpace(source)) {
    const auto row = provision.row(source.offset(index));
    for (std::size_t t = 0; t < limit; ++t) {
      if (aligned[t] && row[l - 1 - t] != index[k - 1 - t]) aligned[t] = false;
    }
  }
  std::size_t run = 0;
  while (run < limit && aligned[run]) ++run;

  // The prefix condition only gets easier as r shrinks, so the first r
  // that tabulates is the maximum.
  for (std::size_t r = run; r >= 1; --r) {
    if (auto inner = tabulate_prefix(provision, r)) {
      return {static_cast<std::int64_t>(r), std::move(inner)};
    }
  }
  return {};
}

std::vector<PassThroughPair> pass_through_map(const ProvisionTensor& provision) {
  const Shape& source = provision.source_shape();
  const std::size_t k = source.rank();
  const std::size_t l = provision.target_rank();
  std::vector<bool> holds(k * l, true);
  for (const Index& index : IndexSpace(source)) {
    const auto row = provision.row(source.offset(index));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        if (row[j] != index[i]) holds[i * l + j] = false;
      }
    }
  }
  std::vector<PassThroughPair> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (holds[i * l + j]) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

namespace {

XTransformerSpec trivial_representation(const ProvisionTensor& provision) {
  const auto k = static_cast<std::int64_t>(provision.source_shape().rank());
  const auto l = static_cast<std::int64_t>(provision.target_rank());
  return XTransformerSpec{
      .inner = provision,
      .inner_pick = Pick::identity(k),
      .pass_pick = Pick{},
      .out_pick = Pick::identity(l),
      .source_shape = provision.source_shape(),
      .target_shape = provision.target_shape(),
  };
}

}  // namespace

XTransformerSpec weak_decomposition(const ProvisionTensor& provision) {
  const Shape& source = provision.source_shape();
  const std::size_t k = source.rank();
  const std::size_t l = provision.target_rank();
  if (source.size() == 0) return trivial_representation(provision);

  // Source of each output coordinate: the smallest non-degenerate input
  // axis it copies, if any.
  std::vector<std::optional<std::size_t>> source_axis(l);
  for (const auto& [i, j] : pass_through_map(provision)) {
    if (source[i] >= 2 && !source_axis[j]) source_axis[j] = i;
  }
  std::vector<std::int64_t> passed;
  std::vector<std::size_t> computed;  // output coordinates produced by the inner transformer
  for (std::size_t j = 0; j < l; ++j) {
    if (source_axis[j]) {
      passed.push_back(static_cast<std::int64_t>(*source_axis[j]));
    } else {
      computed.push_back(j);
    }
  }
  if (passed.empty()) return trivial_representation(provision);
  std::sort(passed.begin(), passed.end());
  passed.erase(std::unique(passed.begin(), passed.end()), passed.end());

  // Axis-aligned dependence of the computed outputs on each input axis.
  std::vector<bool> depends(k, false);
  for (std::int64_t flat = 0; flat < source.size(); ++flat) {
    const Index index = source.unravel(flat);
    const auto row = provision.row(flat);
    for (std::size_t i = 0; i < k; ++i) {
      if (depends[i] || index[i] == 0) continue;
      const auto base = provision.row(flat - index[i] * source.strides()[i]);
      for (std::size_t j : computed) {
        if (row[j] != base[j]) {
          depends[i] = true;
          break;
        }
      }
    }
  }
  std::vector<std::int64_t> inner_axes;
  for (std::size_t i = 0; i < k; ++i) {
    if (depends[i]) inner_axes.push_back(static_cast<std::int64_t>(i));
  }

  std::vector<std::int64_t> inner_dims;
  for (std::int64_t i : inner_axes) inner_dims.push_back(source[i]);
  std::vector<std::int64_t> inner_target;
  for (std::size_t j : computed) inner_target.push_back(provision.target_shape()[j]);
  const Shape inner_source(inner_dims);

  // Every computed output is a function of the inner axes alone, so
  // evaluating with the remaining axes at zero is enough.
  IntTensor table(inner_source + Shape{static_cast<std::int64_t>(computed.size())});
  auto out = table.data();
  std::int64_t row_index = 0;
  for (const Index& reduced : IndexSpace(inner_source)) {
    Index full = Index::zeros(k);
    for (std::size_t a = 0; a < inner_axes.size(); ++a) full[inner_axes[a]] = reduced[a];
    const auto row = provision.row(source.offset(full));
    for (std::size_t c = 0; c < computed.size(); ++c) {
      out[row_index * computed.size() + c] = row[computed[c]];
    }
    ++row_index;
  }

  std::vector<std::int64_t> out_pick(l);
  std::size_t next_computed = 0;
  for (std::size_t j = 0; j < l; ++j) {
    if (source_axis[j]) {
      const auto pos = std::lower_bound(passed.begin(), passed.end(),
                                        static_cast<std::int64_t>(*source_axis[j])) -
                       passed.begin();
      out_pick[j] = static_cast<std::int64_t>(computed.size()) + pos;
    } else {
      out_pick[j] = static_cast<std::int64_t>(next_computed++);
    }
  }

  return XTransformerSpec{
      .inner = ProvisionTensor(std::move(table), Shape(std::move(inner_target))),
      .inner_pick = Pick(std::move(inner_axes)),
      .pass_pick = Pick(std::move(passed)),
      .out_pick = Pick(std::move(out_pick)),
      .source_shape = source,
      .target_shape = provision.target_shape(),
  };
}

std::string_view to_string(SliceVerdict verdict) {
  switch (verdict) {
    case SliceVerdict::Sliceable:
      return "SLICEABLE";
    case SliceVerdict::WeaklySliceableOnly:
      return "WEAKLY_SLICEABLE_ONLY";
    case SliceVerdict::WeaklySliceableDisjoint:
      return "WEAKLY_SLICEABLE_DISJOINT";
    case SliceVerdict::TrivialOnly:
      return "TRIVIAL_ONLY";
  }
  return "UNKNOWN";
}

SlicingDiagnostic slicing_impossibility(const ProvisionTensor& provision) {
  SlicingDiagnostic diag{
      .suffix = max_sliceable_suffix(provision),
      .pass_through = pass_through_map(provision),
      .canonical = weak_decomposition(provision),
      .overlap = {},
      .verdict = SliceVerdict::TrivialOnly,
  };
  const auto inner = diag.canonical.inner_pick.image();
  const auto passed = diag.canonical.pass_pick.image();
  std::set_intersection(inner.begin(), inner.end(), passed.begin(), passed.end(),
                        std::back_inserter(diag.overlap));

  if (diag.suffix.max_suffix >= 1) {
    diag.verdict = SliceVerdict::Sliceable;
  } else if (diag.canonical.pass_pick.empty()) {
    diag.verdict = SliceVerdict::TrivialOnly;
  } else if (!diag.overlap.empty()) {
    diag.verdict = SliceVerdict::WeaklySliceableOnly;
  } else {
    diag.verdict = SliceVerdict::WeaklySliceableDisjoint;
  }
  return diag;
}

}  // namespace scatterx
