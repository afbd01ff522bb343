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

#include "edc/schedule.h"

#include <gtest/gtest.h>

#include "edc/error.h"
#include "oracles.h"

namespace edc {
namespace {

TEST(DifficultyTest, EpochZeroIsFloor) {
  DifficultySchedule s(0.20, 30);
  EXPECT_EQ(s.Difficulty(0), 0.05);
}

TEST(DifficultyTest, FloorActiveForSlowSchedule) {
  // 1 - e^-0.05 = 0.04877... < 0.05
  ASSERT_LT(oracle::Difficulty("0.05", 1, "0"), 0.05);
  DifficultySchedule s(0.05, 100);
  EXPECT_EQ(s.Difficulty(1), 0.05);
}

TEST(DifficultyTest, MatchesHighPrecisionOracle) {
  EXPECT_NEAR(DifficultySchedule(0.20, 30).Difficulty(30), oracle::Difficulty("0.2", 30), 1e-15);
  EXPECT_NEAR(DifficultySchedule(0.20, 30).Difficulty(30), 0.9975212478233336, 1e-15);
  EXPECT_NEAR(DifficultySchedule(0.05, 100).Difficulty(100), 0.9932620530009145, 1e-15);
  EXPECT_NEAR(DifficultySchedule(0.10, 60).Difficulty(7), oracle::Difficulty("0.1", 7), 1e-15);
}

TEST(DifficultyTest, CustomFloor) {
  DifficultySchedule s(0.20, 30, 0.5);
  EXPECT_EQ(s.Difficulty(1), 0.5);
  EXPECT_NEAR(s.Difficulty(10), oracle::Difficulty("0.2", 10, "0.5"), 1e-15);
}

TEST(DifficultyTest, StaysBelowOneWhenSaturated) {
  DifficultySchedule s(3.0, 100);
  EXPECT_EQ(s.Difficulty(100), kMaxDifficulty);
  EXPECT_LT(s.Difficulty(100), 1.0);
  EXPECT_EQ(DifficultySchedule(0.2, 30).Difficulty(1000), kMaxDifficulty);
}

TEST(DifficultyTest, RejectsNegativeEpoch) {
  EXPECT_THROW(DifficultySchedule(0.2, 30).Difficulty(-1), InvalidArgument);
}

TEST(DifficultyScheduleTest, RejectsInvalidParameters) {
  EXPECT_THROW(DifficultySchedule(0.0, 30), InvalidArgument);
  EXPECT_THROW(DifficultySchedule(-0.1, 30), InvalidArgument);
  EXPECT_THROW(DifficultySchedule(0.2, 30, 0.0), InvalidArgument);
  EXPECT_THROW(DifficultySchedule(0.2, 30, 1.0), InvalidArgument);
  EXPECT_THROW(DifficultySchedule(0.2, -1), InvalidArgument);
}

TEST(AlphaForMaxEpochTest, PaperConfigurations) {
  EXPECT_EQ(AlphaForMaxEpoch(30), 0.20);
  EXPECT_EQ(AlphaForMaxEpoch(60), 0.10);
  EXPECT_EQ(AlphaForMaxEpoch(100), 0.05);
}

TEST(AlphaForMaxEpochTest, OtherLengthsTargetFinalDifficulty) {
  EXPECT_NEAR(AlphaForMaxEpoch(50), 0.10596634733096073, 1e-15);
  EXPECT_NEAR(AlphaForMaxEpoch(50), oracle::AlphaForTarget(50), 1e-15);
  for (std::int64_t m : {1, 7, 45, 200}) {
    EXPECT_NEAR(DifficultySchedule::ForMaxEpoch(m).Difficulty(m), 0.995, 1e-12) << m;
  }
}

TEST(AlphaForMaxEpochTest, RejectsZero) {
  EXPECT_THROW(AlphaForMaxEpoch(0), InvalidArgument);
  EXPECT_THROW(DifficultySchedule::ForMaxEpoch(0), InvalidArgument);
}

TEST(ScheduleTableTest, SingleEpoch) {
  const auto table = DifficultySchedule(0.20, 1).Table();
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].first, 0);
  EXPECT_EQ(table[0].second, 0.05);
  EXPECT_EQ(table[1].first, 1);
  EXPECT_NEAR(table[1].second, 0.18126924692201815, 1e-15);
}

TEST(ScheduleTableTest, MaxEpochZero) {
  const auto table = DifficultySchedule(0.20, 0).Table();
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0], std::make_pair(std::int64_t{0}, 0.05));
}

// Monotone, bounded, and consistent with pointwise evaluation over a grid of
// schedules.
TEST(SchedulePropertyTest, MonotoneBoundedConsistent) {
  for (double alpha : {0.001, 0.01, 0.05, 0.1, 0.2, 0.7, 3.0}) {
    for (double floor : {0.01, 0.05, 0.3, 0.9}) {
      DifficultySchedule s(alpha, 150, floor);
      const auto table = s.Table();
      ASSERT_EQ(table.size(), 151u);
      for (std::size_t e = 0; e < table.size(); ++e) {
        const double d = table[e].second;
        EXPECT_EQ(table[e].first, static_cast<std::int64_t>(e));
        EXPECT_EQ(d, s.Difficulty(static_cast<std::int64_t>(e)));
        EXPECT_GE(d, floor);
        EXPECT_LT(d, 1.0);
        if (e > 0) {
          const double prev = table[e - 1].second;
          EXPECT_LE(prev, d);
          // Strict once above the floor, until doubles saturate near 1.
          if (prev > floor && d < kMaxDifficulty) EXPECT_LT(prev, d) << alpha << " " << e;
        }
      }
    }
  }
}

TEST(SchedulePropertyTest, PaperConfigurationsEndAbove099) {
  for (std::int64_t m : {30, 60, 100}) {
    EXPECT_GT(DifficultySchedule::ForMaxEpoch(m).Difficulty(m), 0.99) << m;
  }
}

}  // namespace
}  // namespace edc
