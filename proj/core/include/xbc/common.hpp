/*
 * Copyright 2026 The xbc Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace xbc {

using Vertex = std::uint32_t;
using Dist = std::uint32_t;
/// Path counts and every centrality value derived from them. Arithmetic on
/// counts goes through checked_add/checked_mul; a wrapped value is never
/// returned.
using Count = std::uint64_t;

inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (edge-list syntax, disconnected graph, bad ids).
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedError : public DataError {
 public:
  using DataError::DataError;
};

/// A path count or centrality sum does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A size guard (subset count, path cap, enumeration limit) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A statistic has no defined value for the given input.
class UndefinedResultError : public Error {
 public:
  using Error::Error;
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("path count exceeds 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("path count exceeds 64 bits");
  return r;
}

}  // namespace xbc
