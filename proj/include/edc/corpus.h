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

#ifndef EDC_CORPUS_H_
#define EDC_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "edc/error.h"
#include "edc/text.h"

namespace edc {

struct CaptionRecord {
  std::string source_id;
  int caption_index = 0;  // 0..4 for Clotho rows, 0 for JSONL
  std::string text;

  friend bool operator==(const CaptionRecord&, const CaptionRecord&) = default;
};

// Records in file order; a record's ordinal is its index in `records`.
struct Corpus {
  std::vector<CaptionRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

inline constexpr int kClothoCaptionsPerClip = 5;

// Clotho-style CSV with the header `file_name,caption_1,...,caption_5`.
// Emits one record per caption cell, row-major. Quoted fields may contain
// commas, doubled quotes and newlines. Errors carry the 1-based line number.
Corpus LoadClothoCsv(const std::filesystem::path& path);
Corpus ParseClothoCsv(std::istream& in, const std::string& source_name);

// One JSON object per line with string fields "id" and "caption". Blank
// lines are skipped; an empty file is an empty corpus.
Corpus LoadJsonl(const std::filesystem::path& path);
Corpus ParseJsonl(std::istream& in, const std::string& source_name);

// Picks a loader from the extension: .csv -> Clotho CSV, anything else JSONL.
Corpus LoadCorpus(const std::filesystem::path& path);

// Contiguous slices of at most batch_size items; only the last may be short.
template <typename T>
std::vector<std::span<const T>> Batches(std::span<const T> items, std::size_t batch_size) {
  if (batch_size == 0) throw InvalidArgument("batch_size must be at least 1");
  std::vector<std::span<const T>> out;
  out.reserve((items.size() + batch_size - 1) / batch_size);
  for (std::size_t begin = 0; begin < items.size(); begin += batch_size) {
    out.push_back(items.subspan(begin, std::min(batch_size, items.size() - begin)));
  }
  return out;
}

inline std::vector<std::span<const CaptionRecord>> Batches(const Corpus& corpus,
                                                           std::size_t batch_size) {
  return Batches(std::span<const CaptionRecord>(corpus.records), batch_size);
}

// Tokenizes and classifies every record; ordinal i goes to record i.
std::vector<TokenizedCaption> PrepareCaptions(const Corpus& corpus, const StopwordSet& sw);

}  // namespace edc

#endif  // EDC_CORPUS_H_
