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

#include "xbc/oracle.hpp"

#include <algorithm>

namespace xbc::oracle {

PathSet build_path_set(const Graph& g, std::span<const Vertex> endpoint_excl, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<char> excluded(n, 0);
  for (Vertex v : endpoint_excl) excluded[v] = 1;

  PathSet ps;
  ps.through.resize(n);
  for (Vertex s = 0; s < n; ++s) {
    if (excluded[s]) continue;
    const ShortestPathDag dag = bfs_sssp(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || excluded[t] || dag.dist[t] == kUnreachable) continue;
      const std::size_t room = cap - ps.paths.size();
      if (dag.sigma[t] > room) throw GuardError("path set exceeds cap " + std::to_string(cap));
      for (Path& p : enumerate_shortest_paths(dag, t, room)) {
        const std::size_t id = ps.paths.size();
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ps.through[p[i]].push_back(id);
        ps.paths.push_back(std::move(p));
      }
    }
  }
  return ps;
}

std::size_t internal_members(std::span<const Vertex> path, std::span<const Vertex> a) {
  std::size_t hits = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (std::binary_search(a.begin(), a.end(), path[i])) ++hits;
  }
  return hits;
}

BruteCounts brute_counts(const PathSet& ps, std::span<const Vertex> a) {
  std::vector<Vertex> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  BruteCounts c;
  for (const Path& p : ps.paths) {
    const std::size_t hits = internal_members(p, sorted);
    if (hits == 1) ++c.exactly_one;
    if (hits >= 1) ++c.at_least_one;
    if (hits == sorted.size()) ++c.all_members;
    if (hits % 2 == 1) ++c.odd_members;
  }
  return c;
}

}  // namespace xbc::oracle
