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

#ifndef EDC_CURRICULUM_H_
#define EDC_CURRICULUM_H_

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edc/error.h"
#include "edc/rng.h"
#include "edc/schedule.h"
#include "edc/text.h"

namespace edc {

enum class Execution { kSequential, kParallel };

struct TransformConfig {
  std::uint64_t seed = 42;
  DifficultySchedule schedule;
  StopwordSet stopwords;
};

template <typename G>
concept UniformSource = requires(G g) {
  { g.NextUniform() } -> std::convertible_to<double>;
};

// Stopwords curriculum for one caption.
//
// Each stopword draws one uniform s from `source`, in token order, and is
// dropped when s < 1 - difficulty. Non-stopwords draw nothing and are always
// kept. The result keeps source_id, ordinal and the mask of retained tokens.
// Requires a classified caption and 0 < difficulty <= 1.
template <UniformSource G>
TokenizedCaption ApplyCurriculum(const TokenizedCaption& caption, double difficulty, G& source) {
  if (!caption.classified()) {
    throw InvalidArgument("caption " + std::to_string(caption.ordinal) + " is not classified");
  }
  const auto& mask = *caption.stopword_mask;
  if (mask.size() != caption.tokens.size()) {
    throw InvalidArgument("caption " + std::to_string(caption.ordinal) +
                          " has a stopword mask of the wrong length");
  }
  if (!(difficulty > 0.0 && difficulty <= 1.0)) {
    throw InvalidArgument("difficulty must lie in (0, 1], got " + std::to_string(difficulty));
  }
  const double p_remove = 1.0 - difficulty;

  TokenizedCaption out;
  out.source_id = caption.source_id;
  out.ordinal = caption.ordinal;
  std::vector<bool> out_mask;
  out.tokens.reserve(caption.tokens.size());
  for (std::size_t i = 0; i < caption.tokens.size(); ++i) {
    if (mask[i] && static_cast<double>(source.NextUniform()) < p_remove) continue;
    out.tokens.push_back(caption.tokens[i]);
    out_mask.push_back(mask[i]);
  }
  out.stopword_mask = std::move(out_mask);
  return out;
}

// result[i] = ApplyCurriculum(captions[i], D(epoch),
//                             DeriveStream(seed, epoch, captions[i].ordinal)).
// Output depends only on each caption and its ordinal, never on its batch or
// on `execution`. Throws InvalidArgument on duplicate ordinals.
std::vector<TokenizedCaption> TransformBatch(std::span<const TokenizedCaption> captions,
                                             std::int64_t epoch, const TransformConfig& config,
                                             Execution execution = Execution::kSequential);

// Tokens joined by single spaces.
std::string Render(const TokenizedCaption& caption);

}  // namespace edc

#endif  // EDC_CURRICULUM_H_
