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

#include "xbc/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace xbc {

namespace {

std::vector<char> mask_of(std::size_t n, const VertexSet& a) {
  std::vector<char> mask(n, 0);
  for (Vertex v : a) mask[v] = 1;
  return mask;
}

Count to_count(__int128 acc) {
  if (acc < 0) throw std::logic_error("inclusion-exclusion sum is negative");
  if (acc > static_cast<__int128>(std::numeric_limits<Count>::max())) {
    throw OverflowError("centrality value exceeds 64 bits");
  }
  return static_cast<Count>(acc);
}

}  // namespace

DependencyRow dependency_row(const Graph& g, Vertex s) {
  const ShortestPathDag dag = bfs_sssp(g, s);
  const std::size_t n = g.num_vertices();
  std::vector<Count> tau(n, 0);
  for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
    const Vertex w = *it;
    const Count below = checked_add(tau[w], 1);
    for (Vertex p : dag.preds(w)) tau[p] = checked_add(tau[p], below);
  }
  DependencyRow row{s, std::vector<Count>(n, 0)};
  for (Vertex v = 0; v < n; ++v) {
    if (v != s) row.delta[v] = checked_mul(dag.sigma[v], tau[v]);
  }
  return row;
}

std::vector<Count> betweenness_all(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Count> b(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    const DependencyRow row = dependency_row(g, s);
    for (Vertex v = 0; v < n; ++v) b[v] = checked_add(b[v], row.delta[v]);
  }
  return b;
}

SetCentrality::SetCentrality(const Graph& g) : g_(g), apsp_(g_) {}

Count SetCentrality::restricted_betweenness(Vertex v, const VertexSet& excl) const {
  if (!excl.contains(v)) throw std::invalid_argument("restricted betweenness: vertex not in exclusion set");
  const Vertex member[] = {v};
  return co_betweenness(member, excl);
}

Count SetCentrality::co_betweenness(std::span<const Vertex> members, const VertexSet& excl) const {
  if (members.empty()) throw std::invalid_argument("co-betweenness needs at least one member");
  for (Vertex v : members) {
    if (!excl.contains(v)) throw std::invalid_argument("co-betweenness: member outside exclusion set");
  }
  const std::size_t n = g_.num_vertices();
  const auto blocked = mask_of(n, excl);
  std::vector<Vertex> chain(members.begin(), members.end());

  Count total = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (blocked[s]) continue;
    const auto ds = apsp_.dist_row(s);
    std::sort(chain.begin(), chain.end(), [&](Vertex x, Vertex y) { return ds[x] < ds[y]; });
    bool strictly_increasing = true;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (ds[chain[i - 1]] == ds[chain[i]]) strictly_increasing = false;
    }
    if (!strictly_increasing) continue;

    // The chain s -> a_1 -> ... -> a_k must itself be geodesic; only then is
    // the product of segment counts bounded by sigma(s, a_k).
    Dist length = ds[chain.front()];
    for (std::size_t i = 1; i < chain.size(); ++i) length += apsp_.dist(chain[i - 1], chain[i]);
    const Vertex last = chain.back();
    if (length != ds[last]) continue;
    Count prefix = apsp_.sigma(s, chain.front());
    for (std::size_t i = 1; i < chain.size(); ++i) {
      prefix = checked_mul(prefix, apsp_.sigma(chain[i - 1], chain[i]));
    }

    const auto dl = apsp_.dist_row(last);
    const auto sl = apsp_.sigma_row(last);
    for (Vertex t = 0; t < n; ++t) {
      if (blocked[t] || t == s) continue;
      if (length + dl[t] == ds[t]) total = checked_add(total, checked_mul(prefix, sl[t]));
    }
  }
  return total;
}

Count SetCentrality::group_betweenness_direct(const VertexSet& a) const {
  const std::size_t n = g_.num_vertices();
  const auto blocked = mask_of(n, a);
  Count total = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (blocked[s]) continue;
    const DistSigmaRow residual = bfs_sssp_avoiding(g_, s, a.members());
    for (Vertex t = 0; t < n; ++t) {
      if (blocked[t] || t == s) continue;
      const Count surviving = residual.dist[t] == apsp_.dist(s, t) ? residual.sigma[t] : 0;
      total = checked_add(total, apsp_.sigma(s, t) - surviving);
    }
  }
  return total;
}

namespace {

// Sums weight(j) * CC_A(i_j) over every non-empty subset i_j of A.
template <typename Weight>
__int128 subset_sum(const SetCentrality& sc, const VertexSet& a, std::size_t guard, Weight weight) {
  const std::size_t k = a.size();
  if (k > guard) {
    throw GuardError("set size " + std::to_string(k) + " exceeds inclusion-exclusion guard " +
                     std::to_string(guard));
  }
  __int128 acc = 0;
  std::vector<Vertex> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(a[i]);
    }
    acc += weight(static_cast<int>(subset.size())) * static_cast<__int128>(sc.co_betweenness(subset, a));
  }
  return acc;
}

}  // namespace

Count SetCentrality::group_betweenness_ie(const VertexSet& a, std::size_t guard) const {
  return to_count(subset_sum(*this, a, guard, [](int j) { return j % 2 == 1 ? 1 : -1; }));
}

Count SetCentrality::exclusive_betweenness_ie(const VertexSet& a, std::size_t guard) const {
  return to_count(subset_sum(*this, a, guard, [](int j) { return j % 2 == 1 ? j : -j; }));
}

Count SetCentrality::exclusive_betweenness_direct(const VertexSet& a) const {
  const MemberRows rows(g_, a);
  const std::size_t n = g_.num_vertices();
  const auto blocked = mask_of(n, a);
  Count total = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (blocked[s]) continue;
    for (Vertex t = 0; t < n; ++t) {
      if (blocked[t] || t == s) continue;
      total = checked_add(total, rows.exactly_one(s, t, apsp_.dist(s, t)));
    }
  }
  return total;
}

Count SetCentrality::exclusive_pair(Vertex v1, Vertex v2) const {
  if (v1 == v2) throw std::invalid_argument("exclusive_pair needs two distinct vertices");
  const VertexSet a({v1, v2}, g_.num_vertices());
  const __int128 value = static_cast<__int128>(restricted_betweenness(v1, a)) +
                         static_cast<__int128>(restricted_betweenness(v2, a)) -
                         2 * static_cast<__int128>(co_betweenness(a));
  return to_count(value);
}

Count SetCentrality::per_source_exclusive(Vertex s, const VertexSet& a) const {
  if (a.contains(s)) throw std::invalid_argument("per-source count: source lies in the set");
  const MemberRows rows(g_, a);
  Count total = 0;
  for (Vertex t = 0; t < g_.num_vertices(); ++t) {
    if (t == s || a.contains(t)) continue;
    total = checked_add(total, rows.exactly_one(s, t, apsp_.dist(s, t)));
  }
  return total;
}

MemberRows::MemberRows(const Graph& g, const VertexSet& a) : a_(a) {
  rows_.reserve(a.size());
  std::vector<Vertex> others;
  for (Vertex v : a) {
    others.clear();
    for (Vertex u : a) {
      if (u != v) others.push_back(u);
    }
    rows_.push_back(bfs_sssp_avoiding(g, v, others));
  }
}

Count MemberRows::exactly_one(Vertex s, Vertex t, Dist d_st) const {
  Count total = 0;
  for (const DistSigmaRow& row : rows_) {
    const Dist ds = row.dist[s];
    const Dist dt = row.dist[t];
    if (ds == kUnreachable || dt == kUnreachable) continue;
    if (ds + dt == d_st) total = checked_add(total, checked_mul(row.sigma[s], row.sigma[t]));
  }
  return total;
}

}  // namespace xbc
