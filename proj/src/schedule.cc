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

#include <algorithm>
#include <cmath>
#include <string>

#include "edc/error.h"

namespace edc {

DifficultySchedule::DifficultySchedule(double alpha, std::int64_t max_epoch, double floor)
    : alpha_(alpha), max_epoch_(max_epoch), floor_(floor) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("alpha must be a positive finite number, got " + std::to_string(alpha));
  }
  if (!(floor > 0.0 && floor < 1.0)) {
    throw InvalidArgument("floor must lie in (0, 1), got " + std::to_string(floor));
  }
  if (max_epoch < 0) {
    throw InvalidArgument("max_epoch must be non-negative, got " + std::to_string(max_epoch));
  }
}

DifficultySchedule DifficultySchedule::ForMaxEpoch(std::int64_t max_epoch, double floor) {
  return DifficultySchedule(AlphaForMaxEpoch(max_epoch), max_epoch, floor);
}

double DifficultySchedule::Difficulty(std::int64_t epoch) const {
  if (epoch < 0) {
    throw InvalidArgument("epoch must be non-negative, got " + std::to_string(epoch));
  }
  // -expm1(-x) == 1 - exp(-x) without cancellation near epoch 0.
  const double raw = -std::expm1(-alpha_ * static_cast<double>(epoch));
  if (raw < floor_) return floor_;
  // Once exp(-x) drops below 2^-54 the subtraction rounds to exactly 1.
  return std::min(raw, kMaxDifficulty);
}

std::vector<std::pair<std::int64_t, double>> DifficultySchedule::Table() const {
  std::vector<std::pair<std::int64_t, double>> table;
  table.reserve(static_cast<std::size_t>(max_epoch_) + 1);
  for (std::int64_t epoch = 0; epoch <= max_epoch_; ++epoch) {
    table.emplace_back(epoch, Difficulty(epoch));
  }
  return table;
}

double AlphaForMaxEpoch(std::int64_t max_epoch) {
  if (max_epoch < 1) {
    throw InvalidArgument("max_epoch must be at least 1, got " + std::to_string(max_epoch));
  }
  switch (max_epoch) {
    case 30:
      return 0.20;
    case 60:
      return 0.10;
    case 100:
      return 0.05;
    default:
      return -std::log1p(-kTargetFinalDifficulty) / static_cast<double>(max_epoch);
  }
}

}  // namespace edc
