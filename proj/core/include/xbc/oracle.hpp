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

#include <span>
#include <vector>

#include "xbc/common.hpp"
#include "xbc/graph.hpp"
#include "xbc/spd.hpp"

namespace xbc::oracle {

// Brute-force ground truth: every shortest path of a small graph held in
// memory. Exponential in general; use only where path counts stay under cap.

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// All shortest paths over ordered endpoint pairs, with S(v) as an index.
struct PathSet {
  std::vector<Path> paths;
  /// through[v]: ids of paths that have v as an internal vertex, ascending.
  std::vector<std::vector<std::size_t>> through;
};

/// Enumerates shortest s->t paths for every ordered pair s != t with neither
/// endpoint in `endpoint_excl`, source-major and lexicographic within a pair.
PathSet build_path_set(const Graph& g, std::span<const Vertex> endpoint_excl,
                       std::size_t cap = kDefaultPathCap);

struct BruteCounts {
  Count exactly_one = 0;
  Count at_least_one = 0;
  Count all_members = 0;
  /// Paths through an odd number of members: the iterated symmetric
  /// difference S(v_1) ^ ... ^ S(v_k).
  Count odd_members = 0;

  friend bool operator==(const BruteCounts&, const BruteCounts&) = default;
};

/// Tallies internal members of `a` on every path of `ps`.
BruteCounts brute_counts(const PathSet& ps, std::span<const Vertex> a);

/// Number of internal vertices of `path` that lie in `a` (a sorted).
std::size_t internal_members(std::span<const Vertex> path, std::span<const Vertex> a);

}  // namespace xbc::oracle
