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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "support/expectations.hpp"
#include "support/test_graphs.hpp"
#include "xbc/exact.hpp"
#include "xbc/sampling.hpp"

namespace xbc {
namespace {

using testing::path_graph;

constexpr Vertex L(int label) { return static_cast<Vertex>(label - 1); }

void expect_relative(double actual, double expected, double tolerance) {
  if (expected == 0.0) {
    EXPECT_EQ(actual, 0.0);
  } else {
    EXPECT_LE(std::abs(actual - expected) / expected, tolerance) << actual << " vs " << expected;
  }
}

void expect_unbiased(const Graph& g, const VertexSet& a) {
  const auto xb = static_cast<double>(testing::brute_tally(g, a.members()).exactly_one);
  const auto e = testing::exhaustive_expectations(g, a);
  expect_relative(e.general_uniform_pair, xb, 1e-9);
  expect_relative(e.general_uniform_source, xb, 1e-9);
  expect_relative(e.general_custom, xb, 1e-9);
  expect_relative(e.path, xb, 1e-9);
  expect_relative(e.pair, xb, 1e-9);
  expect_relative(e.source, xb, 1e-9);
}

TEST(Substream, DistinctAndStable) {
  EXPECT_EQ(substream_seed(1, 2), substream_seed(1, 2));
  EXPECT_NE(substream_seed(1, 2), substream_seed(1, 3));
  EXPECT_NE(substream_seed(1, 2), substream_seed(2, 2));
}

TEST(RunningStats, MatchesTwoPass) {
  const std::vector<double> xs{1e6, 1e6 + 1, 1e6 + 2, 1e6 + 5};
  RunningStats s;
  for (double x : xs) s.add(x);
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  EXPECT_DOUBLE_EQ(s.mean(), mean);
  EXPECT_NEAR(s.sample_variance(), ss / 3, 1e-9);
  RunningStats one;
  one.add(3);
  EXPECT_EQ(one.sample_variance(), 0.0);
}

TEST(PairDistribution, UniformPair) {
  const Graph g = path_graph(4);
  const Vertex excl[] = {1};
  const auto d = PairDistribution::uniform_pair(g, excl);
  EXPECT_EQ(d.pair_count(), 6u);
  EXPECT_DOUBLE_EQ(d.probability(0, 2), 1.0 / 6);
  EXPECT_EQ(d.probability(0, 1), 0.0);
  EXPECT_EQ(d.probability(2, 2), 0.0);
  const Vertex most[] = {0, 1, 2};
  EXPECT_THROW(PairDistribution::uniform_pair(g, most), DataError);
}

TEST(PairDistribution, ProbabilitiesSumToOneAndDrawsFollowThem) {
  const Graph g = testing::nine_vertex_graph();
  const Vertex excl[] = {L(5)};
  const std::vector<PairDistribution> dists{
      PairDistribution::uniform_pair(g, excl), PairDistribution::uniform_source(g, excl),
      PairDistribution::custom(g, excl, [](Vertex i, Vertex j) { return 1.0 + (i * 7 + j) % 5; })};
  for (const auto& d : dists) {
    double total = 0;
    for (Vertex i = 0; i < 9; ++i)
      for (Vertex j = 0; j < 9; ++j) {
        const double p = d.probability(i, j);
        const bool in_space = i != j && i != L(5) && j != L(5);
        EXPECT_EQ(p > 0, in_space);
        total += p;
      }
    EXPECT_NEAR(total, 1.0, 1e-12);

    const int draws = 56000;
    std::map<std::pair<Vertex, Vertex>, int> freq;
    Rng rng(17);
    for (int k = 0; k < draws; ++k) ++freq[d.draw(rng)];
    for (const auto& [pair, count] : freq) {
      const double p = d.probability(pair.first, pair.second);
      ASSERT_GT(p, 0.0);
      EXPECT_NEAR(count, draws * p, 4 * std::sqrt(draws * p * (1 - p)) + 1);
    }
  }
}

TEST(PairDistribution, CustomRejectsBadWeights) {
  const Vertex none[] = {0};
  EXPECT_THROW(PairDistribution::custom(path_graph(3), none, [](Vertex, Vertex) { return 0.0; }),
               std::invalid_argument);
}

TEST(Estimators, PathOfThreeIsDeterministic) {
  const Graph g = path_graph(3);
  const VertexSet a({1}, 3);
  const auto dist = PairDistribution::uniform_pair(g, a.members());
  for (const auto& e : {estimate_general(g, a, dist, 50, 1), estimate_pair_sampling(g, a, 50, 2),
                        estimate_path_sampling(g, a, 50, 3), estimate_source_sampling(g, a, 50, 4)}) {
    EXPECT_EQ(e.mean, 2.0);
    EXPECT_EQ(e.sample_variance, 0.0);
    EXPECT_EQ(e.samples, 50u);
  }
}

TEST(Estimators, NoQualifyingPathGivesZero) {
  const Graph g = path_graph(4);
  const VertexSet a({1, 2}, 4);
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    EXPECT_EQ(estimate_pair_sampling(g, a, 20, seed).mean, 0.0);
    EXPECT_EQ(estimate_path_sampling(g, a, 20, seed).mean, 0.0);
    EXPECT_EQ(estimate_source_sampling(g, a, 20, seed).mean, 0.0);
    EXPECT_EQ(estimate_general(g, a, PairDistribution::uniform_source(g, a.members()), 20, seed).mean, 0.0);
  }
}

TEST(Estimators, StarSourceSamplingHasZeroVariance) {
  const Graph g = testing::star_graph(6);
  const VertexSet a({0}, 7);
  const auto e = estimate_source_sampling(g, a, 200, 8);
  EXPECT_EQ(e.mean, 30.0);
  EXPECT_EQ(e.sample_variance, 0.0);
}

TEST(Estimators, FourCyclePairCount) {
  const Graph g = testing::cycle_graph(4);
  ExclusiveEstimator est(g, VertexSet({1}, 4));
  EXPECT_EQ(est.pair_count_between(0, 2), 1u);
  EXPECT_EQ(est.pair_count_between(2, 0), 1u);
  EXPECT_EQ(est.pair_count_between(0, 3), 0u);
}

TEST(Estimators, NineVertexSourceWeight) {
  const Graph g = testing::nine_vertex_graph();
  ExclusiveEstimator est(g, VertexSet({L(2), L(6), L(7)}, 9));
  EXPECT_EQ(est.source_count(L(1)), 7u);
  EXPECT_EQ(est.source_weight(L(1)), 42.0);
}

TEST(Estimators, InputValidation) {
  const Graph g = path_graph(3);
  const VertexSet a({1}, 3);
  EXPECT_THROW(estimate_pair_sampling(g, a, 0, 1), std::invalid_argument);
  EXPECT_THROW(estimate_source_sampling(path_graph(3), VertexSet({0, 1}, 3), 5, 1), DataError);
  const auto wrong = PairDistribution::uniform_pair(g, {});
  EXPECT_THROW(estimate_general(g, a, wrong, 5, 1), std::invalid_argument);
}

TEST(Estimators, NineVertexExhaustiveExpectation) {
  expect_unbiased(testing::nine_vertex_graph(), VertexSet({L(2), L(6), L(7)}, 9));
}

TEST(EstimatorProperties, ExhaustiveExpectationOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> size(4, 10);
    const Graph g = testing::random_connected_graph(size(rng), 0.3, rng);
    std::uniform_int_distribution<std::size_t> k(1, std::min<std::size_t>(3, g.num_vertices() - 2));
    expect_unbiased(g, VertexSet(testing::random_subset(g.num_vertices(), k(rng), rng), g.num_vertices()));
  }
}

TEST(EstimatorProperties, DeterministicAndNonNegative) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(8, 0.3, rng);
    const VertexSet a(testing::random_subset(8, 2, rng), 8);
    const auto dist = PairDistribution::uniform_source(g, a.members());
    const auto e1 = estimate_general(g, a, dist, 300, trial);
    const auto e2 = estimate_general(g, a, dist, 300, trial);
    EXPECT_EQ(e1.mean, e2.mean);
    EXPECT_EQ(e1.sample_variance, e2.sample_variance);
    EXPECT_EQ(e1.target_set, a);
    EXPECT_EQ(e1.seed, static_cast<std::uint64_t>(trial));
    EXPECT_GE(e1.mean, 0.0);
    EXPECT_EQ(estimate_path_sampling(g, a, 300, 5).mean, estimate_path_sampling(g, a, 300, 5).mean);
    EXPECT_GE(estimate_path_sampling(g, a, 300, 5).sample_variance, 0.0);
  }
}

TEST(Estimators, KarateConvergence) {
  const Graph g = load_edge_list_file(testing::data_path("karate.edges")).graph;
  const VertexSet a({g.vertex_of(1), g.vertex_of(34)}, g.num_vertices());
  const auto exact = static_cast<double>(SetCentrality(g).exclusive_betweenness_ie(a));
  expect_relative(estimate_source_sampling(g, a, 10000, 42).mean, exact, 0.05);
  expect_relative(estimate_pair_sampling(g, a, 10000, 42).mean, exact, 0.05);
  expect_relative(estimate_path_sampling(g, a, 20000, 42).mean, exact, 0.10);
}

TEST(CandidateFamily, SingletonsOnPathOfThree) {
  const Graph g = path_graph(3);
  const auto family = subsets_up_to(std::vector<Vertex>{0, 1, 2}, 1, 3);
  ASSERT_EQ(family.size(), 3u);
  const auto est = estimate_candidate_family(g, family, PairDistribution::uniform_pair(g, {}), 20000, 6);
  EXPECT_EQ(est[0].mean, 0.0);
  EXPECT_EQ(est[2].mean, 0.0);
  EXPECT_NEAR(est[1].mean, 2.0, 0.1);
}

TEST(CandidateFamily, EndpointMemberContributesNothing) {
  const Graph g = path_graph(3);
  const std::vector<VertexSet> family{VertexSet({0, 1}, 3)};
  const auto est = estimate_candidate_family(g, family, PairDistribution::uniform_pair(g, {}), 500, 1);
  EXPECT_EQ(est[0].mean, 0.0);
}

TEST(CandidateFamily, Validation) {
  const Graph g = path_graph(3);
  const auto all = PairDistribution::uniform_pair(g, {});
  EXPECT_THROW(estimate_candidate_family(g, {}, all, 10, 1), std::invalid_argument);
  const Vertex excl[] = {1};
  const std::vector<VertexSet> family{VertexSet({1}, 3)};
  EXPECT_THROW(estimate_candidate_family(g, family, PairDistribution::uniform_pair(g, excl), 10, 1),
               std::invalid_argument);
}

TEST(CandidateFamily, MatchesSingleSetWeights) {
  // A one-set family gives the same draws as the general sampler over all
  // vertices, except that draws touching the set at an endpoint score 0.
  const Graph g = testing::nine_vertex_graph();
  const VertexSet a({L(2), L(6), L(7)}, 9);
  const auto xb = static_cast<double>(SetCentrality(g).exclusive_betweenness_ie(a));
  const std::vector<VertexSet> family{a};
  const auto est = estimate_candidate_family(g, family, PairDistribution::uniform_pair(g, {}), 50000, 12);
  expect_relative(est[0].mean, xb, 0.1);
}

// Sets with tiny XB (e.g. 2, a single unordered pair) have a relative
// standard error above 10% at T = 1e5, so the 10% bound is asserted for
// XB >= 20 and every set is held to four standard errors.
TEST(CandidateFamily, KarateAllPairs) {
  const Graph g = load_edge_list_file(testing::data_path("karate.edges")).graph;
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  std::vector<VertexSet> family;
  for (auto& a : subsets_up_to(pool, 2, n))
    if (a.size() == 2) family.push_back(std::move(a));
  ASSERT_EQ(family.size(), 561u);
  const SetCentrality sc(g);
  const std::uint64_t samples = 100000;
  const auto est = estimate_candidate_family(g, family, PairDistribution::uniform_pair(g, {}), samples, 2024);
  for (std::size_t f = 0; f < family.size(); ++f) {
    const auto exact = static_cast<double>(sc.exclusive_betweenness_direct(family[f]));
    if (exact == 0) {
      EXPECT_EQ(est[f].mean, 0.0);
      continue;
    }
    const double error = std::abs(est[f].mean - exact);
    const double standard_error = std::sqrt(est[f].sample_variance / static_cast<double>(samples));
    if (exact >= 20) EXPECT_LE(error / exact, 0.10) << "set " << f;
    EXPECT_GT(standard_error, 0.0) << "set " << f;
    EXPECT_LE(error, 4 * standard_error) << "set " << f;
  }
}

TEST(SubsetsUpTo, Counts) {
  const std::vector<Vertex> pool{0, 1, 2, 3};
  EXPECT_EQ(subsets_up_to(pool, 1, 5).size(), 4u);
  EXPECT_EQ(subsets_up_to(pool, 2, 5).size(), 10u);
  EXPECT_EQ(subsets_up_to(pool, 4, 5).size(), 15u);
}

}  // namespace
}  // namespace xbc
