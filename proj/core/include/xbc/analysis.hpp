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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xbc/exact.hpp"
#include "xbc/graph.hpp"

namespace xbc {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultEnumerationGuard = 1'000'000;

/// Counts are ordered-pair values unless `unordered` is set, in which case
/// they are halved for presentation.
struct Convention {
  bool unordered = false;
  Count present(Count ordered_value) const noexcept { return unordered ? ordered_value / 2 : ordered_value; }
  const char* name() const noexcept { return unordered ? "unordered" : "ordered"; }
};

struct CorrelationRow {
  VertexSet set;
  Count xb = 0;
  Count gb = 0;
  Count cb = 0;
};

struct Coefficients {
  std::string x;
  std::string y;
  /// Empty when a column is constant and the coefficient is undefined.
  std::optional<double> pearson;
  std::optional<double> spearman;
};

struct CorrelationReport {
  std::size_t set_size = 0;
  std::vector<CorrelationRow> rows;
  /// (xb, gb), (xb, cb), (gb, cb), in that order.
  std::vector<Coefficients> coefficients;

  const Coefficients& between(const std::string& x, const std::string& y) const;
};

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Exact xb, gb and cb for every vertex set of the given size (rows in
/// lexicographic order of dense ids) plus the three pairwise correlations,
/// computed on the presented values. Throws GuardError when C(n, size)
/// exceeds `guard`.
CorrelationReport run_correlation(const SetCentrality& sc, std::size_t size, Convention convention = {},
                                  std::uint64_t guard = kDefaultEnumerationGuard);

struct CsvMetadata {
  std::string graph_path;
  Convention convention;
  std::optional<std::uint64_t> seed;
};

/// Header "set,xb,gb,cb"; each set is its '-'-joined sorted original labels.
/// Metadata and coefficients go into leading '#' comment lines.
void write_correlation_csv(std::ostream& out, const Graph& g, const CorrelationReport& report,
                           const CsvMetadata& meta);

struct CsvRow {
  std::vector<std::int64_t> labels;
  Count xb = 0;
  Count gb = 0;
  Count cb = 0;
};

struct CorrelationCsv {
  std::vector<std::string> comments;
  std::vector<CsvRow> rows;
};

CorrelationCsv read_correlation_csv(std::istream& in);

struct BenchRow {
  std::size_t set_size = 0;
  std::vector<double> seconds;
  double max_seconds() const;
  double median_seconds() const;
};

struct BenchReport {
  double cache_build_seconds = 0.0;
  std::vector<BenchRow> rows;
};

/// Times exclusive_betweenness_ie on `trials` uniform random k-subsets for
/// each k in [min_size, max_size], single-threaded. The all-pairs cache is
/// built once up front and timed separately.
BenchReport run_bench(const Graph& g, std::size_t min_size, std::size_t max_size, std::size_t trials,
                      std::uint64_t seed, std::size_t guard = kDefaultSubsetGuard);

void write_bench_csv(std::ostream& out, const BenchReport& report, const CsvMetadata& meta);

}  // namespace xbc
