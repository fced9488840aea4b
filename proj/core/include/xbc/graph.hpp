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
#include <span>
#include <utility>
#include <vector>

#include "xbc/common.hpp"

namespace xbc {

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Vertices are dense ids 0..n-1. Every vertex keeps the label it had in the
/// input file so results can be reported in the caller's numbering. Neighbor
/// lists are sorted; each edge is visible from both endpoints.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list over 0..n-1. Throws DataError on
  /// self-loops, duplicate edges or out-of-range ids. Labels default to the
  /// dense ids.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::int64_t> labels = {});

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  std::int64_t label(Vertex v) const noexcept { return labels_[v]; }
  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  /// Dense id of a label; throws DataError if no vertex carries it.
  Vertex vertex_of(std::int64_t label) const;

  bool is_connected() const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::int64_t> labels_;
};

/// Sorted, duplicate-free, non-empty proper subset of V(G).
class VertexSet {
 public:
  VertexSet() = default;
  /// Validates against a graph with n vertices; sorts and rejects duplicates,
  /// the empty set, out-of-range ids and the full vertex set.
  VertexSet(std::vector<Vertex> members, std::size_t n);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Vertex v) const noexcept;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const noexcept { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Resolves file labels to a VertexSet of dense ids.
VertexSet vertex_set_from_labels(const Graph& g, std::span<const std::int64_t> labels);

enum class IndexBase { kAuto, kZero, kOne };

struct LoadOptions {
  IndexBase base = IndexBase::kAuto;
  bool require_connected = true;
};

struct LoadResult {
  Graph graph;
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
  /// Resolved base: 0 or 1.
  int index_base = 0;
};

/// Reads a whitespace-separated edge list. Lines starting with '%' or '#' are
/// comments; a leading three-integer MatrixMarket size line is skipped.
///
/// If the ids (after subtracting the base) are exactly 0..n-1 they are kept
/// as dense ids; otherwise ids are renumbered in order of first appearance.
/// Either way each vertex's label is the id as written in the file.
LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Canonical form: one "u v" per line, 0-based dense ids, u < v, sorted.
void write_edge_list(const Graph& g, std::ostream& out);

/// Induced subgraph on the largest connected component, ids re-densified in
/// increasing order. Ties go to the component holding the smallest label.
Graph largest_component(const Graph& g);

struct DegreeStats {
  std::size_t max_degree = 0;
  /// mean degree = degree_sum / vertex_count, kept exact.
  std::size_t degree_sum = 0;
  std::size_t vertex_count = 0;
  double mean_degree() const noexcept {
    return vertex_count == 0 ? 0.0 : static_cast<double>(degree_sum) / static_cast<double>(vertex_count);
  }
};

DegreeStats degree_stats(const Graph& g);

}  // namespace xbc
