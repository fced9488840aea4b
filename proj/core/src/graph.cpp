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

#include "xbc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace xbc {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::int64_t> labels) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::int64_t{0});
  }
  if (labels.size() != n) throw DataError("label table size does not match vertex count");

  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DataError("edge endpoint out of range");
    if (u == v) throw DataError("self-loop on vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw DataError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::vertex_of(std::int64_t label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return static_cast<Vertex>(v);
  }
  throw DataError("no vertex with id " + std::to_string(label));
}

bool Graph::is_connected() const {
  const std::size_t n = num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members, std::size_t n) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("vertex set must be non-empty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("vertex set contains duplicates");
  }
  if (members_.back() >= n) throw std::invalid_argument("vertex set member out of range");
  if (members_.size() >= n) throw std::invalid_argument("vertex set must be a proper subset");
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet vertex_set_from_labels(const Graph& g, std::span<const std::int64_t> labels) {
  std::vector<Vertex> ids;
  ids.reserve(labels.size());
  for (auto l : labels) ids.push_back(g.vertex_of(l));
  return VertexSet(std::move(ids), g.num_vertices());
}

namespace {

bool is_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '%' || line[pos] == '#';
}

std::vector<std::int64_t> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ',') ++j;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError(line_no, "unparsable token '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    auto ints = parse_ints(line, line_no);
    if (!seen_data && ints.size() == 3) {
      // MatrixMarket "rows cols nnz" header.
      seen_data = true;
      continue;
    }
    seen_data = true;
    // A third column (edge weight) is tolerated and ignored.
    if (ints.size() < 2 || ints.size() > 3) {
      throw ParseError(line_no, "expected two vertex ids");
    }
    raw.emplace_back(ints[0], ints[1]);
  }
  if (raw.empty()) throw DataError("edge list is empty");

  std::int64_t min_id = raw.front().first;
  for (auto [u, v] : raw) min_id = std::min({min_id, u, v});
  int base = 0;
  switch (options.base) {
    case IndexBase::kAuto: base = min_id >= 1 ? 1 : 0; break;
    case IndexBase::kZero: base = 0; break;
    case IndexBase::kOne: base = 1; break;
  }
  if (min_id < base) throw DataError("vertex id " + std::to_string(min_id) + " below index base");

  // Dense ids are kept when the file already uses base..base+n-1.
  std::unordered_map<std::int64_t, Vertex> index;
  std::vector<std::int64_t> labels;
  for (auto [u, v] : raw) {
    for (auto id : {u, v}) {
      if (index.emplace(id, static_cast<Vertex>(labels.size())).second) labels.push_back(id);
    }
  }
  const std::size_t n = labels.size();
  std::int64_t max_id = *std::max_element(labels.begin(), labels.end());
  if (min_id == base && max_id - base + 1 == static_cast<std::int64_t>(n)) {
    for (auto& [id, dense] : index) dense = static_cast<Vertex>(id - base);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<std::int64_t>(v) + base;
  }

  LoadResult result;
  result.index_base = base;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<std::uint64_t> seen;
  for (auto [a, b] : raw) {
    Vertex u = index.at(a);
    Vertex v = index.at(b);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) {
      ++result.duplicates_dropped;
      continue;
    }
    edges.emplace_back(u, v);
  }
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  if (options.require_connected && !result.graph.is_connected()) {
    throw DisconnectedError("graph is not connected");
  }
  return result;
}

LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return load_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph largest_component(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> comp(n, static_cast<std::size_t>(-1));
  std::vector<std::vector<Vertex>> members;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = members.size();
    members.emplace_back();
    std::vector<Vertex> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == static_cast<std::size_t>(-1)) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  if (members.size() <= 1) return g;

  auto min_label = [&](const std::vector<Vertex>& c) {
    std::int64_t best = g.label(c.front());
    for (Vertex v : c) best = std::min(best, g.label(v));
    return best;
  };
  std::size_t best = 0;
  for (std::size_t c = 1; c < members.size(); ++c) {
    if (members[c].size() > members[best].size() ||
        (members[c].size() == members[best].size() && min_label(members[c]) < min_label(members[best]))) {
      best = c;
    }
  }

  auto keep = members[best];
  std::sort(keep.begin(), keep.end());
  std::vector<Vertex> remap(n, 0);
  std::vector<std::int64_t> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    if (comp[u] == best) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph::from_edges(keep.size(), edges, std::move(labels));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.vertex_count = g.num_vertices();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.degree_sum += g.degree(v);
  }
  return s;
}

}  // namespace xbc
