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

#ifndef EDC_STATS_H_
#define EDC_STATS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "edc/corpus.h"
#include "edc/curriculum.h"

namespace edc {

// The two per-epoch quantities plotted against D.
struct EpochStats {
  std::int64_t epoch = 0;
  double difficulty = 0.0;
  // Sum of transformed caption lengths over the corpus.
  std::uint64_t total_tokens_per_epoch = 0;
  // Mean over batches of the number of distinct token strings in the batch's
  // transformed captions. 0 for an empty corpus.
  double avg_unique_tokens_per_batch = 0.0;

  friend bool operator==(const EpochStats&, const EpochStats&) = default;
};

struct StatsOptions {
  std::size_t batch_size = 64;
  // When set, each epoch keeps only k captions per clip (grouped by
  // source_id), chosen with a stream seeded from (seed, epoch, clip index).
  std::optional<std::size_t> captions_per_clip;
  Execution execution = Execution::kSequential;
};

struct TokenCounts {
  std::uint64_t total = 0;
  std::uint64_t stopwords = 0;
  std::uint64_t content() const { return total - stopwords; }
};

// Requires classified captions.
TokenCounts CountTokens(std::span<const TokenizedCaption> captions);

// The captions that take part in `epoch` under `captions_per_clip`, in
// corpus order. Groups with at most k captions are kept whole.
std::vector<TokenizedCaption> SelectCaptionsPerClip(std::span<const TokenizedCaption> captions,
                                                    std::size_t captions_per_clip,
                                                    std::uint64_t seed, std::int64_t epoch);

// Transforms `captions` batch by batch at `epoch` and aggregates the result.
// Execution mode only affects speed, never the numbers.
EpochStats ComputeEpochStats(std::span<const TokenizedCaption> captions, std::int64_t epoch,
                             const TransformConfig& config, const StatsOptions& options);

// One EpochStats per epoch 0..config.schedule.max_epoch(), sorted by epoch.
std::vector<EpochStats> Sweep(std::span<const TokenizedCaption> captions,
                              const TransformConfig& config, const StatsOptions& options);

// Tokenizes and classifies `corpus` with config.stopwords, then sweeps.
std::vector<EpochStats> Sweep(const Corpus& corpus, const TransformConfig& config,
                              const StatsOptions& options);

inline constexpr std::string_view kDatHeader =
    "difficulty total_tokens_per_epoch avg_tokens_per_batch";

// Header line, then `%.6f %llu %.4f` per epoch. Throws InvalidArgument on
// empty input and IoError when the file cannot be written.
void WriteDat(std::span<const EpochStats> stats, std::ostream& out);
void EmitDat(std::span<const EpochStats> stats, const std::filesystem::path& path);

struct DatRow {
  double difficulty = 0.0;
  std::uint64_t total_tokens_per_epoch = 0;
  double avg_tokens_per_batch = 0.0;
};

// Inverse of WriteDat, up to the printed precision.
std::vector<DatRow> ParseDat(std::istream& in, const std::string& source_name);

}  // namespace edc

#endif  // EDC_STATS_H_
