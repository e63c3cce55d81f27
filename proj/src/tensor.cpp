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

#include "scatterx/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace scatterx {

namespace {

template <typename Seq>
std::string join_tuple(const Seq& values) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (auto v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

Index Index::segment(std::size_t first, std::size_t last) const {
  return Index(std::vector<std::int64_t>(coords_.begin() + first, coords_.begin() + last));
}

Index operator+(const Index& a, const Index& b) {
  Index out = a;
  out += b;
  return out;
}

Index& operator+=(Index& a, const Index& b) {
  std::vector<std::int64_t> coords = a.vec();
  coords.insert(coords.end(), b.begin(), b.end());
  a = Index(std::move(coords));
  return a;
}

std::string to_string(const Index& index) { return join_tuple(index); }

Shape::Shape(std::initializer_list<std::int64_t> dims) : dims_(dims) { init(); }

Shape::Shape(std::vector<std::int64_t> dims) : dims_(std::move(dims)) { init(); }

void Shape::init() {
  for (std::int64_t d : dims_) {
    if (d < 0) throw ArgumentError("negative extent in shape " + join_tuple(dims_));
  }
  strides_.assign(dims_.size(), 1);
  size_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= dims_[i];
  }
}

Shape Shape::segment(std::size_t first, std::size_t last) const {
  return Shape(std::vector<std::int64_t>(dims_.begin() + first, dims_.begin() + last));
}

bool Shape::contains(const Index& index) const {
  if (index.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (index[i] < 0 || index[i] >= dims_[i]) return false;
  }
  return true;
}

std::int64_t Shape::offset(const Index& index) const { return offset(index.coords()); }

std::int64_t Shape::offset(std::span<const std::int64_t> coords) const {
  std::int64_t flat = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) flat += coords[i] * strides_[i];
  return flat;
}

Index Shape::unravel(std::int64_t flat) const {
  std::vector<std::int64_t> coords(dims_.size(), 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    coords[i] = flat / strides_[i];
    flat %= strides_[i];
  }
  return Index(std::move(coords));
}

Shape operator+(const Shape& a, const Shape& b) {
  std::vector<std::int64_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return Shape(std::move(dims));
}

std::string to_string(const Shape& shape) { return join_tuple(shape.dims()); }

IndexSpace::iterator::iterator(const Shape* shape, std::int64_t flat)
    : shape_(shape), flat_(flat), current_(Index::zeros(shape->rank())) {}

IndexSpace::iterator& IndexSpace::iterator::operator++() {
  ++flat_;
  // Odometer step, last axis fastest.
  for (std::size_t axis = shape_->rank(); axis-- > 0;) {
    if (++current_[axis] < (*shape_)[axis]) return *this;
    current_[axis] = 0;
  }
  return *this;
}

Pick::Pick(std::initializer_list<std::int64_t> values) : Pick(std::vector<std::int64_t>(values)) {}

Pick::Pick(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::int64_t v : values_) {
    if (v < 0) throw PickRangeError("negative pick value in " + join_tuple(values_));
  }
}

Pick Pick::identity(std::int64_t n) { return range(0, n); }

Pick Pick::range(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> values;
  for (std::int64_t v = first; v < last; ++v) values.push_back(v);
  return Pick(std::move(values));
}

bool Pick::applicable_to(std::size_t length) const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](std::int64_t v) { return v < static_cast<std::int64_t>(length); });
}

Index Pick::apply(const Index& index) const { return apply(index.coords()); }

Index Pick::apply(std::span<const std::int64_t> coords) const {
  if (!applicable_to(coords.size())) {
    throw PickRangeError("pick " + join_tuple(values_) + " cannot be applied to an index of length " +
                         std::to_string(coords.size()));
  }
  std::vector<std::int64_t> out(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) out[j] = coords[values_[j]];
  return Index(std::move(out));
}

bool Pick::is_smooth() const {
  for (std::size_t j = 1; j < values_.size(); ++j) {
    if (values_[j] != values_[j - 1] + 1) return false;
  }
  return true;
}

std::set<std::int64_t> Pick::image() const { return {values_.begin(), values_.end()}; }

bool Pick::is_shuffle(std::int64_t n) const {
  if (static_cast<std::int64_t>(values_.size()) != n) return false;
  std::set<std::int64_t> img = image();
  return static_cast<std::int64_t>(img.size()) == n &&
         (n == 0 || (*img.begin() == 0 && *img.rbegin() == n - 1));
}

std::string to_string(const Pick& pick) { return join_tuple(pick.values()); }

std::vector<Index> index_class(const Shape& shape, const Pick& pick, const Index& index) {
  if (!shape.contains(index)) {
    throw IndexError("index " + to_string(index) + " is not valid for shape " + to_string(shape));
  }
  const Index key = pick.apply(index);
  std::vector<Index> cell;
  for (const Index& k : IndexSpace(shape)) {
    if (pick.apply(k) == key) cell.push_back(k);
  }
  return cell;
}

Index to_tuple(const IntTensor& tensor) {
  if (tensor.rank() != 1) {
    throw RankError("only rank-1 tensors convert to tuples, got rank " +
                    std::to_string(tensor.rank()));
  }
  return Index(std::vector<std::int64_t>(tensor.data().begin(), tensor.data().end()));
}

IntTensor to_tensor(const Index& index) {
  return IntTensor(Shape{static_cast<std::int64_t>(index.size())}, index.vec());
}

}  // namespace scatterx
