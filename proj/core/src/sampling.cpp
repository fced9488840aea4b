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

#include "xbc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xbc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SampleEstimate finish(const RunningStats& stats, std::uint64_t seed, const VertexSet& a) {
  return {stats.mean(), stats.sample_variance(), stats.count(), seed, a};
}

std::pair<Vertex, Vertex> draw_distinct_pair(std::span<const Vertex> pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> first(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> second(0, pool.size() - 2);
  const std::size_t a = first(rng);
  std::size_t b = second(rng);
  if (b >= a) ++b;
  return {pool[a], pool[b]};
}

void require_samples(std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t iteration) {
  return splitmix64(splitmix64(seed) ^ iteration);
}

PairDistribution::PairDistribution(PairDistributionKind kind, const Graph& g, std::span<const Vertex> excl)
    : kind_(kind), n_(g.num_vertices()), in_space_(g.num_vertices(), 1) {
  for (Vertex v : excl) in_space_[v] = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (in_space_[v]) outside_.push_back(v);
  }
  if (outside_.size() < 2) throw DataError("pair space is empty: fewer than two vertices outside the set");
}

PairDistribution PairDistribution::uniform_pair(const Graph& g, std::span<const Vertex> excl) {
  return PairDistribution(PairDistributionKind::kUniformPair, g, excl);
}

PairDistribution PairDistribution::uniform_source(const Graph& g, std::span<const Vertex> excl) {
  PairDistribution d(PairDistributionKind::kUniformSource, g, excl);
  const std::size_t n = d.n_;
  const double p_source = 1.0 / static_cast<double>(d.outside_.size());
  d.table_.assign(n * n, 0.0);
  d.target_draw_.resize(n);
  for (Vertex i : d.outside_) {
    const DistSigmaRow row = bfs_row(g, i);
    std::vector<double> weights;
    double total = 0.0;
    for (Vertex j : d.outside_) {
      const double w = j == i ? 0.0 : static_cast<double>(row.sigma[j]);
      if (j != i && w == 0.0) throw DataError("graph is not connected; some pair has no shortest path");
      weights.push_back(w);
      total += w;
    }
    for (std::size_t k = 0; k < d.outside_.size(); ++k) {
      d.table_[i * n + d.outside_[k]] = p_source * weights[k] / total;
    }
    d.target_draw_[i] = Weights(weights.begin(), weights.end());
  }
  return d;
}

PairDistribution PairDistribution::custom(const Graph& g, std::span<const Vertex> excl,
                                          const std::function<double(Vertex, Vertex)>& weight) {
  PairDistribution d(PairDistributionKind::kCustom, g, excl);
  const std::size_t n = d.n_;
  d.table_.assign(n * n, 0.0);
  double total = 0.0;
  for (Vertex i : d.outside_) {
    for (Vertex j : d.outside_) {
      if (i == j) continue;
      const double w = weight(i, j);
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("custom pair weights must be positive and finite");
      }
      d.table_[i * n + j] = w;
      total += w;
    }
  }
  d.pair_draw_ = Weights(d.table_.begin(), d.table_.end());
  for (double& p : d.table_) p /= total;
  return d;
}

double PairDistribution::probability(Vertex i, Vertex j) const noexcept {
  if (i >= n_ || j >= n_ || i == j || !in_space_[i] || !in_space_[j]) return 0.0;
  if (kind_ == PairDistributionKind::kUniformPair) return 1.0 / static_cast<double>(pair_count());
  return table_[i * n_ + j];
}

std::pair<Vertex, Vertex> PairDistribution::draw(Rng& rng) const {
  switch (kind_) {
    case PairDistributionKind::kUniformPair:
      return draw_distinct_pair(outside_, rng);
    case PairDistributionKind::kUniformSource: {
      std::uniform_int_distribution<std::size_t> first(0, outside_.size() - 1);
      const Vertex i = outside_[first(rng)];
      std::discrete_distribution<std::size_t> target;
      return {i, outside_[target(rng, target_draw_[i])]};
    }
    case PairDistributionKind::kCustom: {
      std::discrete_distribution<std::size_t> pick;
      const std::size_t index = pick(rng, pair_draw_);
      return {static_cast<Vertex>(index / n_), static_cast<Vertex>(index % n_)};
    }
  }
  throw std::logic_error("unknown pair distribution kind");
}

ExclusiveEstimator::ExclusiveEstimator(const Graph& g, VertexSet a)
    : g_(&g), a_(std::move(a)), member_(g.num_vertices(), 0), rows_(g, a_), dags_(g.num_vertices()) {
  for (Vertex v : a_) member_[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!member_[v]) outside_.push_back(v);
  }
  if (outside_.size() < 2) throw DataError("pair space is empty: fewer than two vertices outside the set");
}

const ShortestPathDag& ExclusiveEstimator::dag(Vertex source) {
  auto& slot = dags_[source];
  if (!slot) slot = bfs_sssp(*g_, source);
  return *slot;
}

bool ExclusiveEstimator::exactly_one_internal(std::span<const Vertex> path) const noexcept {
  std::size_t hits = 0;
  for (std::size_t k = 1; k + 1 < path.size(); ++k) hits += member_[path[k]] ? 1 : 0;
  return hits == 1;
}

double ExclusiveEstimator::general_weight(const PairDistribution& dist, Vertex i, Vertex j,
                                          std::span<const Vertex> path) {
  if (!exactly_one_internal(path)) return 0.0;
  const double p = dist.probability(i, j);
  const double q = 1.0 / static_cast<double>(dag(i).sigma[j]);
  return 1.0 / (p * q);
}

double ExclusiveEstimator::path_weight(Vertex i, Vertex j, std::span<const Vertex> path) {
  if (!exactly_one_internal(path)) return 0.0;
  return static_cast<double>(pair_count()) * static_cast<double>(dag(i).sigma[j]);
}

Count ExclusiveEstimator::source_count(Vertex i) {
  const auto& d = dag(i).dist;
  Count total = 0;
  for (Vertex t : outside_) {
    if (t != i) total = checked_add(total, rows_.exactly_one(i, t, d[t]));
  }
  return total;
}

Count ExclusiveEstimator::pair_count_between(Vertex i, Vertex j) {
  return rows_.exactly_one(i, j, dag(i).dist[j]);
}

double ExclusiveEstimator::source_weight(Vertex i) {
  return static_cast<double>(source_count(i)) * static_cast<double>(outside_.size());
}

double ExclusiveEstimator::pair_weight(Vertex i, Vertex j) {
  return static_cast<double>(pair_count_between(i, j)) * static_cast<double>(pair_count());
}

double ExclusiveEstimator::draw_general(const PairDistribution& dist, Rng& rng) {
  const auto [i, j] = dist.draw(rng);
  const Path path = sample_shortest_path(dag(i), j, rng);
  return general_weight(dist, i, j, path);
}

double ExclusiveEstimator::draw_path(Rng& rng) {
  const auto [i, j] = draw_distinct_pair(outside_, rng);
  const Path path = sample_shortest_path(dag(i), j, rng);
  return path_weight(i, j, path);
}

double ExclusiveEstimator::draw_source(Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, outside_.size() - 1);
  return source_weight(outside_[pick(rng)]);
}

double ExclusiveEstimator::draw_pair(Rng& rng) {
  const auto [i, j] = draw_distinct_pair(outside_, rng);
  return pair_weight(i, j);
}

namespace {

template <typename Draw>
SampleEstimate run(const VertexSet& a, std::uint64_t samples, std::uint64_t seed, Draw draw) {
  require_samples(samples);
  RunningStats stats;
  for (std::uint64_t t = 0; t < samples; ++t) {
    Rng rng = substream(seed, t);
    stats.add(draw(rng));
  }
  return finish(stats, seed, a);
}

void require_same_space(const PairDistribution& dist, const ExclusiveEstimator& est) {
  const auto expected = est.outside();
  const auto actual = dist.outside();
  if (!std::equal(expected.begin(), expected.end(), actual.begin(), actual.end())) {
    throw std::invalid_argument("pair distribution must exclude exactly the target set");
  }
}

}  // namespace

SampleEstimate estimate_general(const Graph& g, const VertexSet& a, const PairDistribution& dist,
                                std::uint64_t samples, std::uint64_t seed) {
  ExclusiveEstimator est(g, a);
  require_same_space(dist, est);
  return run(a, samples, seed, [&](Rng& rng) { return est.draw_general(dist, rng); });
}

SampleEstimate estimate_source_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                        std::uint64_t seed) {
  ExclusiveEstimator est(g, a);
  return run(a, samples, seed, [&](Rng& rng) { return est.draw_source(rng); });
}

SampleEstimate estimate_pair_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                      std::uint64_t seed) {
  ExclusiveEstimator est(g, a);
  return run(a, samples, seed, [&](Rng& rng) { return est.draw_pair(rng); });
}

SampleEstimate estimate_path_sampling(const Graph& g, const VertexSet& a, std::uint64_t samples,
                                      std::uint64_t seed) {
  ExclusiveEstimator est(g, a);
  return run(a, samples, seed, [&](Rng& rng) { return est.draw_path(rng); });
}

std::vector<SampleEstimate> estimate_candidate_family(const Graph& g, std::span<const VertexSet> family,
                                                      const PairDistribution& dist, std::uint64_t samples,
                                                      std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("candidate family is empty");
  require_samples(samples);
  const std::size_t n = g.num_vertices();
  if (dist.outside().size() != n) {
    throw std::invalid_argument("candidate family needs a pair distribution over all vertices");
  }

  // sets_of[v]: indices of the family sets containing v.
  std::vector<std::vector<std::size_t>> sets_of(n);
  for (std::size_t f = 0; f < family.size(); ++f) {
    for (Vertex v : family[f]) sets_of[v].push_back(f);
  }

  std::vector<std::optional<ShortestPathDag>> dags(n);
  std::vector<RunningStats> stats(family.size());
  std::vector<std::uint32_t> internal(family.size(), 0);
  std::vector<char> endpoint(family.size(), 0);
  std::vector<char> qualifies(family.size(), 0);
  std::vector<std::size_t> touched;

  for (std::uint64_t t = 0; t < samples; ++t) {
    Rng rng = substream(seed, t);
    const auto [i, j] = dist.draw(rng);
    if (!dags[i]) dags[i] = bfs_sssp(g, i);
    const Path path = sample_shortest_path(*dags[i], j, rng);
    const double beta = static_cast<double>(dags[i]->sigma[j]) / dist.probability(i, j);

    touched.clear();
    for (std::size_t k = 0; k < path.size(); ++k) {
      const bool is_endpoint = k == 0 || k + 1 == path.size();
      for (std::size_t f : sets_of[path[k]]) {
        if (internal[f] == 0 && !endpoint[f]) touched.push_back(f);
        if (is_endpoint) {
          endpoint[f] = 1;
        } else {
          ++internal[f];
        }
      }
    }
    for (std::size_t f : touched) qualifies[f] = internal[f] == 1 && !endpoint[f];
    for (std::size_t f = 0; f < family.size(); ++f) stats[f].add(qualifies[f] ? beta : 0.0);
    for (std::size_t f : touched) {
      qualifies[f] = 0;
      internal[f] = 0;
      endpoint[f] = 0;
    }
  }

  std::vector<SampleEstimate> out;
  out.reserve(family.size());
  for (std::size_t f = 0; f < family.size(); ++f) out.push_back(finish(stats[f], seed, family[f]));
  return out;
}

std::vector<VertexSet> subsets_up_to(std::span<const Vertex> pool, std::size_t max_size, std::size_t n) {
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.emplace_back(current, n);
    if (current.size() == max_size) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      current.push_back(pool[k]);
      self(self, k + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace xbc
