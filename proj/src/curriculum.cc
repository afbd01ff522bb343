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

#include "edc/curriculum.h"

#include <unordered_set>

#include "parallel.h"

namespace edc {

std::vector<TokenizedCaption> TransformBatch(std::span<const TokenizedCaption> captions,
                                             std::int64_t epoch, const TransformConfig& config,
                                             Execution execution) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(captions.size());
  for (const auto& c : captions) {
    if (!seen.insert(c.ordinal).second) {
      throw InvalidArgument("duplicate caption ordinal " + std::to_string(c.ordinal));
    }
  }

  const double difficulty = config.schedule.Difficulty(epoch);
  std::vector<TokenizedCaption> out(captions.size());
  auto transform_one = [&](std::size_t i) {
    RngStream rng = DeriveStream(config.seed, static_cast<std::uint64_t>(epoch), captions[i].ordinal);
    out[i] = ApplyCurriculum(captions[i], difficulty, rng);
  };
  if (execution == Execution::kParallel) {
    internal::ParallelFor(captions.size(), transform_one);
  } else {
    for (std::size_t i = 0; i < captions.size(); ++i) transform_one(i);
  }
  return out;
}

std::string Render(const TokenizedCaption& caption) {
  std::string out;
  for (std::size_t i = 0; i < caption.tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += caption.tokens[i];
  }
  return out;
}

}  // namespace edc
