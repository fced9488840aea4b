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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xbc/exact.hpp"
#include "xbc/graph.hpp"
#include "xbc/spd.hpp"

namespace xbc {

// Monte Carlo estimators of exclusive betweenness.
//
// Random streams: every estimator draws iteration t from its own
// std::mt19937_64 seeded with substream_seed(seed, t). Results depend only on
// (sampler, graph, set, T, seed) and are reproducible bit for bit within one
// standard library build.

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t iteration);
inline Rng substream(std::uint64_t seed, std::uint64_t iteration) {
  return Rng(substream_seed(seed, iteration));
}

/// One-pass mean and variance (Welford).
class RunningStats {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased (T - 1 denominator); 0 for fewer than two samples.
  double sample_variance() const noexcept {
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct SampleEstimate {
  double mean = 0.0;
  double sample_variance = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  VertexSet target_set;
};

enum class PairDistributionKind { kUniformPair, kUniformSource, kCustom };

/// Probabilities p_ij over N: ordered pairs (i, j), i != j, with i and j
/// outside an exclusion set. Every pair of N has p_ij > 0.
class PairDistribution {
 public:
  /// p_ij = 1 / (|V - excl| (|V - excl| - 1)).
  static PairDistribution uniform_pair(const Graph& g, std::span<const Vertex> excl);
  /// Source uniform over V - excl, then target with probability proportional
  /// to sigma_ij. A path drawn uniformly afterwards is uniform over all
  /// shortest paths leaving the source.
  static PairDistribution uniform_source(const Graph& g, std::span<const Vertex> excl);
  /// p_ij proportional to weight(i, j), which must be positive and finite on N.
  static PairDistribution custom(const Graph& g, std::span<const Vertex> excl,
                                 const std::function<double(Vertex, Vertex)>& weight);

  PairDistributionKind kind() const noexcept { return kind_; }
  std::span<const Vertex> outside() const noexcept { return outside_; }
  std::uint64_t pair_count() const noexcept {
    return static_cast<std::uint64_t>(outside_.size()) * (outside_.size() - 1);
  }
  /// 0 for pairs outside N.
  double probability(Vertex i, Vertex j) const noexcept;
  std::pair<Vertex, Vertex> draw(Rng& rng) const;

 private:
  PairDistribution(PairDistributionKind kind, const Graph& g, std::span<const Vertex> excl);

  PairDistributionKind kind_;
  std::size_t n_ = 0;
  std::vector<Vertex> outside_;
  std::vector<char> in_space_;
  // Dense n x n table for non-uniform kinds.
  std::vector<double> table_;
  // kUniformSource: per-source target distribution over outside_.
  using Weights = std::discrete_distribution<std::size_t>::param_type;
  std::vector<Weights> target_draw_;
  // kCustom: weights over the row-major pair index i * n + j.
  Weights pair_draw_;
};

/// Per-draw weights (beta_t) of the four estimators for one target set, with
/// a lazily filled cache of shortest-path DAGs. Not thread-safe; give each
/// thread its own instance.
class ExclusiveEstimator {
 public:
  /// Throws DataError if fewer than two vertices lie outside `a`.
  ExclusiveEstimator(const Graph& g, VertexSet a);
  ExclusiveEstimator(Graph&&, VertexSet) = delete;

  const VertexSet& set() const noexcept { return a_; }
  std::span<const Vertex> outside() const noexcept { return outside_; }
  std::uint64_t pair_count() const noexcept {
    return static_cast<std::uint64_t>(outside_.size()) * (outside_.size() - 1);
  }
  const ShortestPathDag& dag(Vertex source);

  /// True iff exactly one member of the set is an internal vertex of `path`.
  bool exactly_one_internal(std::span<const Vertex> path) const noexcept;

  /// General sampler: 1 / (p_ij * q) with q = 1 / sigma_ij when the path
  /// qualifies, else 0.
  double general_weight(const PairDistribution& dist, Vertex i, Vertex j, std::span<const Vertex> path);
  /// Shortest-path sampler: |N| * sigma_ij when the path qualifies, else 0.
  double path_weight(Vertex i, Vertex j, std::span<const Vertex> path);
  /// Source sampler: exact qualifying count from i, divided by p_i.
  double source_weight(Vertex i);
  /// Pair sampler: exact qualifying i->j count, divided by p_ij.
  double pair_weight(Vertex i, Vertex j);

  /// Exact number of qualifying shortest paths from i (to any target).
  Count source_count(Vertex i);
  /// Exact number of qualifying shortest i->j paths.
  Count pair_count_between(Vertex i, Vertex j);

  double draw_general(const PairDistribution& dist, Rng& rng);
  double draw_path(Rng& rng);
  double draw_source(Rng& rng);
  double draw_pair(Rng& rng);

 private:
  const Graph* g_;
  VertexSet a_;
  std::vector<char> member_;
  std::vector<Vertex> outside_;
  MemberRows rows_;
  std::vector<std::optional<ShortestPathDag>> dags_;
};

SampleEstimate estimate_general(const Graph& g, const VertexSet& a, const PairDistribution& dist,
                                std::uint64_t samples, std::uint64_t seed);
SampleEstimate estimate_source_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                        std::uint64_t seed);
SampleEstimate estimate_pair_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                      std::uint64_t seed);
SampleEstimate estimate_path_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                      std::uint64_t seed);

/// Estimates XB for every set of `family` from one shared stream of sampled
/// paths. `dist` must range over all vertices (empty exclusion); a draw adds
/// 1 / (p_ij q) to a set when neither endpoint is a member and exactly one
/// member is internal to the path.
std::vector<SampleEstimate> estimate_candidate_family(const Graph& g, std::span<const VertexSet> family,
                                                      const PairDistribution& dist, std::uint64_t samples,
                                                      std::uint64_t seed);

/// All subsets of `pool` with 1..max_size members, as a candidate family.
std::vector<VertexSet> subsets_up_to(std::span<const Vertex> pool, std::size_t max_size, std::size_t n);

}  // namespace xbc
