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

#include "edc/stats.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "parallel.h"

namespace edc {
namespace {

// Keeps clip sampling streams apart from the per-caption removal streams.
constexpr std::uint64_t kClipSamplingSalt = 0xC11BC11BC11BC11BULL;

}  // namespace

TokenCounts CountTokens(std::span<const TokenizedCaption> captions) {
  TokenCounts counts;
  for (const auto& c : captions) {
    if (!c.classified()) {
      throw InvalidArgument("caption " + std::to_string(c.ordinal) + " is not classified");
    }
    counts.total += c.tokens.size();
    for (bool is_stop : *c.stopword_mask) counts.stopwords += is_stop ? 1 : 0;
  }
  return counts;
}

std::vector<TokenizedCaption> SelectCaptionsPerClip(std::span<const TokenizedCaption> captions,
                                                    std::size_t captions_per_clip,
                                                    std::uint64_t seed, std::int64_t epoch) {
  if (captions_per_clip == 0) throw InvalidArgument("captions_per_clip must be at least 1");
  if (epoch < 0) throw InvalidArgument("epoch must be non-negative");

  // Clips in order of first appearance.
  std::unordered_map<std::string_view, std::size_t> clip_of;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < captions.size(); ++i) {
    auto [it, inserted] = clip_of.try_emplace(captions[i].source_id, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(i);
  }

  std::vector<bool> keep(captions.size(), false);
  for (std::size_t clip = 0; clip < members.size(); ++clip) {
    auto& idx = members[clip];
    if (idx.size() <= captions_per_clip) {
      for (std::size_t i : idx) keep[i] = true;
      continue;
    }
    RngStream rng = DeriveStream(seed ^ kClipSamplingSalt, static_cast<std::uint64_t>(epoch), clip);
    // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
    for (std::size_t j = 0; j < captions_per_clip; ++j) {
      const std::size_t remaining = idx.size() - j;
      const auto pick = j + static_cast<std::size_t>(rng.NextUniform() * static_cast<double>(remaining));
      std::swap(idx[j], idx[pick]);
      keep[idx[j]] = true;
    }
  }

  std::vector<TokenizedCaption> out;
  for (std::size_t i = 0; i < captions.size(); ++i) {
    if (keep[i]) out.push_back(captions[i]);
  }
  return out;
}

EpochStats ComputeEpochStats(std::span<const TokenizedCaption> captions, std::int64_t epoch,
                             const TransformConfig& config, const StatsOptions& options) {
  if (options.batch_size == 0) throw InvalidArgument("batch_size must be at least 1");

  std::vector<TokenizedCaption> selected;
  if (options.captions_per_clip) {
    selected = SelectCaptionsPerClip(captions, *options.captions_per_clip, config.seed, epoch);
    captions = selected;
  }

  EpochStats stats;
  stats.epoch = epoch;
  stats.difficulty = config.schedule.Difficulty(epoch);

  const auto batches = Batches(captions, options.batch_size);
  double unique_sum = 0.0;
  for (const auto& batch : batches) {
    const auto transformed = TransformBatch(batch, epoch, config, options.execution);
    std::unordered_set<std::string_view> distinct;
    for (const auto& c : transformed) {
      stats.total_tokens_per_epoch += c.tokens.size();
      for (const auto& t : c.tokens) distinct.insert(t);
    }
    unique_sum += static_cast<double>(distinct.size());
  }
  stats.avg_unique_tokens_per_batch =
      batches.empty() ? 0.0 : unique_sum / static_cast<double>(batches.size());
  return stats;
}

std::vector<EpochStats> Sweep(std::span<const TokenizedCaption> captions,
                              const TransformConfig& config, const StatsOptions& options) {
  const auto n_epochs = static_cast<std::size_t>(config.schedule.max_epoch()) + 1;
  std::vector<EpochStats> out(n_epochs);
  if (options.execution == Execution::kParallel) {
    StatsOptions per_epoch = options;
    per_epoch.execution = Execution::kSequential;
    internal::ParallelFor(n_epochs, [&](std::size_t e) {
      out[e] = ComputeEpochStats(captions, static_cast<std::int64_t>(e), config, per_epoch);
    });
  } else {
    for (std::size_t e = 0; e < n_epochs; ++e) {
      out[e] = ComputeEpochStats(captions, static_cast<std::int64_t>(e), config, options);
    }
  }
  return out;
}

std::vector<EpochStats> Sweep(const Corpus& corpus, const TransformConfig& config,
                              const StatsOptions& options) {
  const auto captions = PrepareCaptions(corpus, config.stopwords);
  return Sweep(std::span<const TokenizedCaption>(captions), config, options);
}

void WriteDat(std::span<const EpochStats> stats, std::ostream& out) {
  if (stats.empty()) throw InvalidArgument("no epoch statistics to write");
  out << kDatHeader << '\n';
  char line[128];
  for (const auto& s : stats) {
    std::snprintf(line, sizeof(line), "%.6f %llu %.4f\n", s.difficulty,
                  static_cast<unsigned long long>(s.total_tokens_per_epoch),
                  s.avg_unique_tokens_per_batch);
    out << line;
  }
}

void EmitDat(std::span<const EpochStats> stats, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  WriteDat(stats, out);
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

std::vector<DatRow> ParseDat(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(source_name, 1, "missing header");
  if (line != kDatHeader) throw ParseError(source_name, 1, "unexpected header '" + line + "'");
  std::vector<DatRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    DatRow row;
    std::string extra;
    if (!(fields >> row.difficulty >> row.total_tokens_per_epoch >> row.avg_tokens_per_batch) ||
        (fields >> extra)) {
      throw ParseError(source_name, line_no, "expected three numeric columns");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace edc
