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

#pragma once

#include <stdexcept>
#include <string>

namespace scatterx {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pick value falls outside the index it is applied to.
class PickRangeError : public Error {
 public:
  using Error::Error;
};

// An index is not valid for the shape it is used with.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A tensor has the wrong rank for the requested conversion.
class RankError : public Error {
 public:
  using Error::Error;
};

// Inconsistent arguments: shape mismatches, out-of-range dims, bad policy names.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A provision tensor maps some source index outside its target shape.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (bad JSON, wrong schema, wrong data length).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatterx
