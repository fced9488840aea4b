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

#include <random>
#include <span>
#include <vector>

#include "xbc/common.hpp"
#include "xbc/graph.hpp"

namespace xbc {

using Path = std::vector<Vertex>;
using Rng = std::mt19937_64;

/// Hop distances and shortest-path counts from one source. Unreachable
/// vertices have dist == kUnreachable and sigma == 0.
struct DistSigmaRow {
  Vertex source = 0;
  std::vector<Dist> dist;
  std::vector<Count> sigma;
};

/// Shortest-path DAG rooted at `source`: preds(v) are the neighbors of v one
/// hop closer to the source. The number of source->t paths in the DAG equals
/// sigma[t].
struct ShortestPathDag {
  Vertex source = 0;
  std::vector<Dist> dist;
  std::vector<Count> sigma;
  /// Vertices in non-decreasing distance order (BFS visit order).
  std::vector<Vertex> order;
  std::vector<std::size_t> pred_offsets;
  std::vector<Vertex> pred_list;

  std::span<const Vertex> preds(Vertex v) const noexcept {
    return {pred_list.data() + pred_offsets[v], pred_list.data() + pred_offsets[v + 1]};
  }
};

/// BFS from s recording the predecessor DAG. Throws OverflowError if some
/// sigma exceeds 64 bits.
ShortestPathDag bfs_sssp(const Graph& g, Vertex s);

/// Distances and counts only; same as bfs_sssp without the DAG.
DistSigmaRow bfs_row(const Graph& g, Vertex s);

/// BFS on G with `forbidden` removed. s must not be forbidden.
DistSigmaRow bfs_sssp_avoiding(const Graph& g, Vertex s, std::span<const Vertex> forbidden);

/// Draws one shortest source->t path uniformly at random by walking back from
/// t, picking predecessor p of v with probability sigma[p] / sigma[v].
Path sample_shortest_path(const ShortestPathDag& dag, Vertex t, Rng& rng);

/// All shortest source->t paths in lexicographic order. Throws GuardError if
/// there are more than `cap`.
std::vector<Path> enumerate_shortest_paths(const ShortestPathDag& dag, Vertex t, std::size_t cap);

/// Cached BFS rows for every source: O(n^2) memory.
class AllPairs {
 public:
  AllPairs() = default;
  explicit AllPairs(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  Dist dist(Vertex s, Vertex t) const noexcept { return dist_[s * n_ + t]; }
  Count sigma(Vertex s, Vertex t) const noexcept { return sigma_[s * n_ + t]; }
  std::span<const Dist> dist_row(Vertex s) const noexcept { return {dist_.data() + s * n_, n_}; }
  std::span<const Count> sigma_row(Vertex s) const noexcept { return {sigma_.data() + s * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<Dist> dist_;
  std::vector<Count> sigma_;
};

}  // namespace xbc
