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
#include <random>

#include "xbc/common.hpp"
#include "xbc/stats.hpp"

namespace xbc {
namespace {

using V = std::vector<double>;

TEST(Pearson, PerfectLinear) {
  EXPECT_DOUBLE_EQ(pearson(V{1, 2, 3}, V{2, 4, 6}), 1.0);
  EXPECT_DOUBLE_EQ(pearson(V{1, 2, 3}, V{3, 2, 1}), -1.0);
}

TEST(Pearson, KnownValue) {
  // Sxy = 8, Sxx = Syy = 10.
  EXPECT_NEAR(pearson(V{1, 2, 3, 4, 5}, V{2, 1, 4, 3, 5}), 0.8, 1e-12);
}

TEST(Pearson, Errors) {
  EXPECT_THROW(pearson(V{1, 2}, V{1}), std::invalid_argument);
  EXPECT_THROW(pearson(V{1}, V{1}), std::invalid_argument);
  EXPECT_THROW(pearson(V{1, 1, 1}, V{1, 2, 3}), UndefinedResultError);
}

TEST(AverageRanks, Ties) {
  EXPECT_EQ(average_ranks(V{10, 30, 20}), (V{1, 3, 2}));
  EXPECT_EQ(average_ranks(V{5, 5, 1, 7}), (V{2.5, 2.5, 1, 4}));
}

TEST(Spearman, MonotoneButNonlinear) {
  EXPECT_DOUBLE_EQ(spearman(V{1, 2, 3, 4}, V{1, 8, 27, 64}), 1.0);
  EXPECT_LT(pearson(V{1, 2, 3, 4}, V{1, 8, 27, 1000}), 1.0);
}

TEST(CorrelationProperties, BoundedAndSymmetric) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise;
  for (int trial = 0; trial < 100; ++trial) {
    V x, y;
    for (int i = 0; i < 20; ++i) {
      x.push_back(noise(rng));
      y.push_back(x.back() * trial + noise(rng));
    }
    const double r = pearson(x, y);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_DOUBLE_EQ(r, pearson(y, x));
    EXPECT_NEAR(spearman(x, y), spearman(y, x), 1e-12);
  }
}

}  // namespace
}  // namespace xbc
