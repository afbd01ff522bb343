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

#ifndef EDC_SCHEDULE_H_
#define EDC_SCHEDULE_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace edc {

inline constexpr double kDefaultFloor = 0.05;

// Largest double below 1; difficulty never reaches 1 for a finite epoch.
inline constexpr double kMaxDifficulty = 1.0 - 0x1.0p-53;

// Difficulty reached at max_epoch when alpha is derived rather than looked up.
inline constexpr double kTargetFinalDifficulty = 0.995;

// Maps a 0-indexed epoch to a difficulty level D in [floor, 1).
//
// D' = 1 - exp(-alpha * epoch), and D = floor whenever D' < floor. D = 1 would
// mean captions are left untouched. For finite epochs D' < 1 mathematically;
// in double precision it is capped at kMaxDifficulty so that stays true.
class DifficultySchedule {
 public:
  // Throws InvalidArgument unless alpha > 0, 0 < floor < 1 and max_epoch >= 0.
  DifficultySchedule(double alpha, std::int64_t max_epoch, double floor = kDefaultFloor);

  // Schedule whose alpha comes from AlphaForMaxEpoch(max_epoch).
  static DifficultySchedule ForMaxEpoch(std::int64_t max_epoch, double floor = kDefaultFloor);

  double alpha() const { return alpha_; }
  std::int64_t max_epoch() const { return max_epoch_; }
  double floor() const { return floor_; }

  // Epochs past max_epoch are allowed and keep following the curve.
  double Difficulty(std::int64_t epoch) const;

  // (epoch, D) for epoch = 0..max_epoch.
  std::vector<std::pair<std::int64_t, double>> Table() const;

 private:
  double alpha_;
  std::int64_t max_epoch_;
  double floor_;
};

// 30 -> 0.20, 60 -> 0.10, 100 -> 0.05; otherwise -ln(1 - 0.995) / max_epoch.
// Throws InvalidArgument for max_epoch < 1.
double AlphaForMaxEpoch(std::int64_t max_epoch);

}  // namespace edc

#endif  // EDC_SCHEDULE_H_
