// Copyright 2026 The EDC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edc/rng.h"

#include <random>
#include <unordered_set>

#include <gtest/gtest.h>

#include "oracles.h"

namespace edc {
namespace {

TEST(RngStreamTest, MatchesIndependentGoldens) {
  for (const auto& g : oracle::kStreamGoldens) {
    RngStream s = DeriveStream(g.seed, g.epoch, g.ordinal);
    EXPECT_EQ(s.state(), g.initial_state);
    RngStream u = s;
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(s.NextU64(), g.outputs[k]);
      EXPECT_EQ(u.NextUniform(), g.uniforms[k]);
    }
  }
}

TEST(RngStreamTest, FirstUniformOfOriginStreamIsPinned) {
  RngStream s = DeriveStream(0, 0, 0);
  EXPECT_EQ(s.NextUniform(), 0.4969049768060131);
}

TEST(RngStreamTest, Deterministic) {
  RngStream a = DeriveStream(99, 3, 17);
  RngStream b = DeriveStream(99, 3, 17);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngStreamTest, UniformsInUnitIntervalOnGrid) {
  RngStream s(12345);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.NextUniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u * 0x1.0p53, std::floor(u * 0x1.0p53));
  }
}

TEST(RngStreamTest, AdjacentOrdinalsNeverCollide) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::uint64_t> small(0, 1000000);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t seed = gen();
    const std::uint64_t epoch = small(gen);
    const std::uint64_t ordinal = small(gen);
    ASSERT_NE(DeriveStream(seed, epoch, ordinal).state(), DeriveStream(seed, epoch, ordinal + 1).state())
        << seed << " " << epoch << " " << ordinal;
    ASSERT_NE(DeriveStream(seed, epoch, ordinal).state(), DeriveStream(seed, epoch + 1, ordinal).state());
  }
}

TEST(RngStreamTest, DistinctStatesAcrossCorpusGrid) {
  std::unordered_set<std::uint64_t> states;
  for (std::uint64_t epoch = 0; epoch <= 100; ++epoch) {
    for (std::uint64_t ordinal = 0; ordinal < 1000; ++ordinal) {
      states.insert(DeriveStream(42, epoch, ordinal).state());
    }
  }
  EXPECT_EQ(states.size(), 101u * 1000u);
}

TEST(RngStreamTest, MeanAndVarianceOfUniforms) {
  RngStream s = DeriveStream(7, 0, 0);
  const int n = 200000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double u = s.NextUniform();
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // Standard errors: 0.00065 for the mean, 0.0002 for the variance.
  EXPECT_NEAR(mean, 0.5, 0.004);
  EXPECT_NEAR(var, 1.0 / 12.0, 0.0015);
}

}  // namespace
}  // namespace edc
