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

namespace xbc {

// All centrality values count shortest paths over ORDERED endpoint pairs
// (s, t), s != t, so every undirected value is even. Set measures only count
// paths whose endpoints both lie outside the set.

/// Per-source dependency: delta[v] = sum over t of sigma_st(v).
struct DependencyRow {
  Vertex source = 0;
  std::vector<Count> delta;
};

/// Accumulates delta for one source in O(n + m). Uses the integer recurrence
/// delta[v] = sigma[v] * tau[v], where tau[v] counts the DAG paths leaving v
/// downwards: tau[v] = sum over successors w of (1 + tau[w]).
DependencyRow dependency_row(const Graph& g, Vertex s);

/// Vertex betweenness B(v) for all v, summed from dependency rows.
std::vector<Count> betweenness_all(const Graph& g);

inline constexpr std::size_t kDefaultSubsetGuard = 12;

/// Exact set measures over a fixed graph. Construction copies the graph, runs
/// one BFS per vertex and caches distances and path counts; afterwards every
/// method is const and safe to call concurrently.
class SetCentrality {
 public:
  explicit SetCentrality(const Graph& g);

  const Graph& graph() const noexcept { return g_; }
  const AllPairs& all_pairs() const noexcept { return apsp_; }

  /// B_excl(v): paths through v with both endpoints outside `excl`; v must
  /// belong to `excl`.
  Count restricted_betweenness(Vertex v, const VertexSet& excl) const;

  /// CC_excl(members): paths through every member, endpoints outside `excl`.
  /// `excl` must contain `members`. Members are chained in order of distance
  /// from the source; equidistant members cannot share a shortest path.
  Count co_betweenness(std::span<const Vertex> members, const VertexSet& excl) const;
  Count co_betweenness(const VertexSet& a) const { return co_betweenness(a.members(), a); }

  /// GB(A) as sigma_st minus the paths surviving in G - A (only when the
  /// residual distance still equals d_G(s, t)).
  Count group_betweenness_direct(const VertexSet& a) const;
  /// GB(A) by alternating sum of co-betweenness over the non-empty subsets.
  Count group_betweenness_ie(const VertexSet& a, std::size_t guard = kDefaultSubsetGuard) const;

  /// XB(A): paths through exactly one member, via inclusion-exclusion with
  /// weight j * (-1)^(j-1) on every size-j subset.
  Count exclusive_betweenness_ie(const VertexSet& a, std::size_t guard = kDefaultSubsetGuard) const;
  /// XB(A) summed per member v over paths in G - (A - {v}) that are still
  /// shortest in G.
  Count exclusive_betweenness_direct(const VertexSet& a) const;

  /// B_A(v1) + B_A(v2) - 2 CC_A({v1, v2}) with A = {v1, v2}.
  Count exclusive_pair(Vertex v1, Vertex v2) const;

  /// Paths from s to every t outside A + {s} through exactly one member.
  Count per_source_exclusive(Vertex s, const VertexSet& a) const;

 private:
  Graph g_;
  AllPairs apsp_;
};

/// Residual BFS rows from each member v of A in G - (A - {v}). A shortest
/// s-t path of G passes exactly one member v iff it is the concatenation of
/// residual s-v and v-t paths whose lengths add up to d_G(s, t).
class MemberRows {
 public:
  MemberRows(const Graph& g, const VertexSet& a);

  const VertexSet& set() const noexcept { return a_; }
  /// Number of shortest s-t paths with exactly one member of A internal.
  /// s and t must lie outside A; d_st is d_G(s, t).
  Count exactly_one(Vertex s, Vertex t, Dist d_st) const;

 private:
  VertexSet a_;
  std::vector<DistSigmaRow> rows_;
};

}  // namespace xbc
