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

// Core index-space types: shapes, indices, picks and dense row-major tensors.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scatterx/errors.hpp"

namespace scatterx {

/// A tuple of integer coordinates. Concatenation is `operator+`.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit Index(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static Index zeros(std::size_t length) {
    return Index(std::vector<std::int64_t>(length, 0));
  }

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  std::span<const std::int64_t> coords() const { return coords_; }
  const std::vector<std::int64_t>& vec() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  /// Coordinates [first, last).
  Index segment(std::size_t first, std::size_t last) const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

Index operator+(const Index& a, const Index& b);
Index& operator+=(Index& a, const Index& b);

std::string to_string(const Index& index);

/// Extents of a dense tensor. Rank-0 shapes hold exactly one element.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<std::int64_t> dims);
  explicit Shape(std::vector<std::int64_t> dims);

  std::size_t rank() const { return dims_.size(); }
  std::int64_t size() const { return size_; }
  std::int64_t operator[](std::size_t axis) const { return dims_[axis]; }
  const std::vector<std::int64_t>& dims() const { return dims_; }

  /// Row-major strides; the last axis has stride 1.
  const std::vector<std::int64_t>& strides() const { return strides_; }

  /// Extents [first, last).
  Shape segment(std::size_t first, std::size_t last) const;

  bool contains(const Index& index) const;

  /// Flat row-major offset. The index must be valid for this shape.
  std::int64_t offset(const Index& index) const;
  std::int64_t offset(std::span<const std::int64_t> coords) const;

  Index unravel(std::int64_t flat) const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

 private:
  void init();

  std::vector<std::int64_t> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 1;
};

Shape operator+(const Shape& a, const Shape& b);

std::string to_string(const Shape& shape);

/// Iterable over every valid index of a shape in row-major order
/// (last axis fastest). Zero-size shapes are empty; rank-0 shapes yield `()`.
class IndexSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index*;
    using reference = const Index&;

    iterator() = default;
    iterator(const Shape* shape, std::int64_t flat);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    std::int64_t flat() const { return flat_; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.flat_ == b.flat_; }

   private:
    const Shape* shape_ = nullptr;
    std::int64_t flat_ = 0;
    Index current_;
  };

  explicit IndexSpace(Shape shape) : shape_(std::move(shape)) {}

  iterator begin() const { return iterator(&shape_, 0); }
  iterator end() const { return iterator(&shape_, shape_.size()); }
  std::int64_t size() const { return shape_.size(); }

 private:
  Shape shape_;
};

inline IndexSpace index_iter(const Shape& shape) { return IndexSpace(shape); }

/// Coordinate selection: `apply(I)[j] = I[values[j]]`. Values must be
/// nonnegative; they may repeat.
class Pick {
 public:
  Pick() = default;
  Pick(std::initializer_list<std::int64_t> values);
  explicit Pick(std::vector<std::int64_t> values);

  static Pick identity(std::int64_t n);
  /// [first, first+1, ..., last-1]
  static Pick range(std::int64_t first, std::int64_t last);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::int64_t operator[](std::size_t j) const { return values_[j]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  /// True when every value indexes into a tuple of the given length.
  bool applicable_to(std::size_t length) const;

  Index apply(const Index& index) const;
  Index apply(std::span<const std::int64_t> coords) const;

  /// Consecutive increasing values; empty and singleton picks are smooth.
  bool is_smooth() const;
  std::set<std::int64_t> image() const;
  bool is_shuffle(std::int64_t n) const;

  friend bool operator==(const Pick&, const Pick&) = default;

 private:
  std::vector<std::int64_t> values_;
};

std::string to_string(const Pick& pick);

template <typename T>
class DenseTensor {
 public:
  using value_type = T;

  DenseTensor() : data_(1, T{}) {}
  explicit DenseTensor(Shape shape) : shape_(std::move(shape)), data_(shape_.size(), T{}) {}
  DenseTensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<std::int64_t>(data_.size()) != shape_.size()) {
      throw ArgumentError("tensor of shape " + to_string(shape_) + " needs " +
                          std::to_string(shape_.size()) + " elements, got " +
                          std::to_string(data_.size()));
    }
  }

  static DenseTensor filled(Shape shape, T value) {
    DenseTensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), value);
    return t;
  }

  /// Builds a tensor by evaluating `fn(index)` at every index in row-major order.
  template <typename Fn>
  static DenseTensor generate(Shape shape, Fn&& fn) {
    DenseTensor t(std::move(shape));
    std::int64_t flat = 0;
    for (const Index& index : IndexSpace(t.shape_)) t.data_[flat++] = static_cast<T>(fn(index));
    return t;
  }

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.rank(); }
  std::int64_t size() const { return shape_.size(); }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  const T& at(const Index& index) const { return data_[checked_offset(index)]; }
  T& at(const Index& index) { return data_[checked_offset(index)]; }

  const T& operator[](const Index& index) const { return data_[shape_.offset(index)]; }
  T& operator[](const Index& index) { return data_[shape_.offset(index)]; }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  std::int64_t checked_offset(const Index& index) const {
    if (!shape_.contains(index)) {
      throw IndexError("index " + to_string(index) + " is not valid for shape " +
                       to_string(shape_));
    }
    return shape_.offset(index);
  }

  Shape shape_;
  std::vector<T> data_;
};

using RealTensor = DenseTensor<double>;
using IntTensor = DenseTensor<std::int64_t>;

/// `G[I_0, ..., I_{k-1}] = E[picks[0][I_0], ..., picks[k-1][I_{k-1}]]`.
template <typename T>
DenseTensor<T> slice(const DenseTensor<T>& tensor, std::span<const Pick> picks) {
  const Shape& shape = tensor.shape();
  if (picks.size() != shape.rank()) {
    throw ArgumentError("slice needs one pick per axis: rank " + std::to_string(shape.rank()) +
                        ", got " + std::to_string(picks.size()) + " picks");
  }
  std::vector<std::int64_t> dims;
  for (std::size_t axis = 0; axis < picks.size(); ++axis) {
    for (std::int64_t v : picks[axis].values()) {
      if (v >= shape[axis]) {
        throw PickRangeError("pick value " + std::to_string(v) + " exceeds extent " +
                             std::to_string(shape[axis]) + " of axis " + std::to_string(axis));
      }
    }
    dims.push_back(static_cast<std::int64_t>(picks[axis].size()));
  }
  std::vector<std::int64_t> source(shape.rank());
  return DenseTensor<T>::generate(Shape(std::move(dims)), [&](const Index& index) {
    for (std::size_t axis = 0; axis < source.size(); ++axis) source[axis] = picks[axis][index[axis]];
    return tensor.data()[shape.offset(source)];
  });
}

template <typename T>
DenseTensor<T> slice(const DenseTensor<T>& tensor, std::initializer_list<Pick> picks) {
  return slice(tensor, std::span<const Pick>(picks.begin(), picks.size()));
}

/// The tensor of trailing extents with `H[J] = E[prefix + J]`.
template <typename T>
DenseTensor<T> subtensor(const DenseTensor<T>& tensor, const Index& prefix) {
  const Shape& shape = tensor.shape();
  if (prefix.size() > shape.rank() || !shape.segment(0, prefix.size()).contains(prefix)) {
    throw IndexError("prefix " + to_string(prefix) + " is not valid for shape " + to_string(shape));
  }
  Shape tail = shape.segment(prefix.size(), shape.rank());
  std::int64_t base = 0;
  for (std::size_t axis = 0; axis < prefix.size(); ++axis) base += prefix[axis] * shape.strides()[axis];
  auto first = tensor.data().begin() + base;
  return DenseTensor<T>(tail, std::vector<T>(first, first + tail.size()));
}

/// Every index K of `shape` with `pick(K) == pick(index)`, in row-major order.
std::vector<Index> index_class(const Shape& shape, const Pick& pick, const Index& index);

/// Rank-1 integer tensor to tuple.
Index to_tuple(const IntTensor& tensor);
/// Tuple to rank-1 integer tensor of shape (length,).
IntTensor to_tensor(const Index& index);

}  // namespace scatterx
