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

#include "xbc/spd.hpp"

#include <algorithm>

namespace xbc {

namespace {

// `blocked` may be empty.
void bfs(const Graph& g, Vertex s, const std::vector<char>& blocked, std::vector<Dist>& dist,
         std::vector<Count>& sigma, std::vector<Vertex>& order) {
  const std::size_t n = g.num_vertices();
  dist.assign(n, kUnreachable);
  sigma.assign(n, 0);
  order.clear();
  order.reserve(n);
  dist[s] = 0;
  sigma[s] = 1;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : g.neighbors(v)) {
      if (!blocked.empty() && blocked[w]) continue;
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] = checked_add(sigma[w], sigma[v]);
    }
  }
}

}  // namespace

ShortestPathDag bfs_sssp(const Graph& g, Vertex s) {
  ShortestPathDag dag;
  dag.source = s;
  bfs(g, s, {}, dag.dist, dag.sigma, dag.order);

  const std::size_t n = g.num_vertices();
  dag.pred_offsets.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t count = 0;
    if (dag.dist[v] != kUnreachable) {
      for (Vertex u : g.neighbors(v)) {
        if (dag.dist[u] != kUnreachable && dag.dist[u] + 1 == dag.dist[v]) ++count;
      }
    }
    dag.pred_offsets[v + 1] = dag.pred_offsets[v] + count;
  }
  dag.pred_list.resize(dag.pred_offsets[n]);
  for (Vertex v = 0; v < n; ++v) {
    if (dag.dist[v] == kUnreachable) continue;
    std::size_t at = dag.pred_offsets[v];
    // Neighbor lists are sorted, so preds come out sorted too.
    for (Vertex u : g.neighbors(v)) {
      if (dag.dist[u] != kUnreachable && dag.dist[u] + 1 == dag.dist[v]) dag.pred_list[at++] = u;
    }
  }
  return dag;
}

DistSigmaRow bfs_row(const Graph& g, Vertex s) {
  DistSigmaRow row;
  row.source = s;
  std::vector<Vertex> order;
  bfs(g, s, {}, row.dist, row.sigma, order);
  return row;
}

DistSigmaRow bfs_sssp_avoiding(const Graph& g, Vertex s, std::span<const Vertex> forbidden) {
  std::vector<char> blocked(g.num_vertices(), 0);
  for (Vertex v : forbidden) blocked[v] = 1;
  if (blocked[s]) throw std::invalid_argument("BFS source is in the forbidden set");
  DistSigmaRow row;
  row.source = s;
  std::vector<Vertex> order;
  bfs(g, s, blocked, row.dist, row.sigma, order);
  return row;
}

Path sample_shortest_path(const ShortestPathDag& dag, Vertex t, Rng& rng) {
  if (t >= dag.dist.size() || dag.dist[t] == kUnreachable) {
    throw std::invalid_argument("target not reachable from source");
  }
  Path path(dag.dist[t] + 1);
  Vertex v = t;
  for (std::size_t pos = path.size(); pos-- > 0;) {
    path[pos] = v;
    if (v == dag.source) break;
    // sigma[v] is the sum of sigma over preds(v); pick the pred whose prefix
    // interval contains a uniform draw in [0, sigma[v]).
    std::uniform_int_distribution<Count> pick(0, dag.sigma[v] - 1);
    Count r = pick(rng);
    for (Vertex p : dag.preds(v)) {
      if (r < dag.sigma[p]) {
        v = p;
        break;
      }
      r -= dag.sigma[p];
    }
  }
  return path;
}

std::vector<Path> enumerate_shortest_paths(const ShortestPathDag& dag, Vertex t, std::size_t cap) {
  if (t >= dag.dist.size() || dag.dist[t] == kUnreachable) {
    throw std::invalid_argument("target not reachable from source");
  }
  if (dag.sigma[t] > cap) {
    throw GuardError("shortest path count " + std::to_string(dag.sigma[t]) + " exceeds cap " +
                     std::to_string(cap));
  }
  std::vector<Path> out;
  out.reserve(dag.sigma[t]);
  Path suffix(dag.dist[t] + 1);
  // Depth-first from t back to the source, filling the path right to left.
  auto walk = [&](auto&& self, Vertex v, std::size_t pos) -> void {
    suffix[pos] = v;
    if (pos == 0) {
      out.push_back(suffix);
      return;
    }
    for (Vertex p : dag.preds(v)) self(self, p, pos - 1);
  };
  walk(walk, t, dag.dist[t]);
  std::sort(out.begin(), out.end());
  return out;
}

AllPairs::AllPairs(const Graph& g) : n_(g.num_vertices()) {
  dist_.resize(n_ * n_);
  sigma_.resize(n_ * n_);
  std::vector<Dist> dist;
  std::vector<Count> sigma;
  std::vector<Vertex> order;
  for (Vertex s = 0; s < n_; ++s) {
    bfs(g, s, {}, dist, sigma, order);
    std::copy(dist.begin(), dist.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    std::copy(sigma.begin(), sigma.end(), sigma_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

}  // namespace xbc
