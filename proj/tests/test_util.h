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

#ifndef EDC_TESTS_TEST_UTIL_H_
#define EDC_TESTS_TEST_UTIL_H_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <unistd.h>

#include "edc/text.h"

namespace edc::testing_util {

inline std::filesystem::path SourcePath(std::string_view relative) {
  return std::filesystem::path(EDC_SOURCE_DIR) / relative;
}

inline std::filesystem::path FixturePath() { return SourcePath("tests/data/synthetic_captions.jsonl"); }

// A file under the temp directory holding `contents`, removed on destruction.
class TempFile {
 public:
  explicit TempFile(std::string_view contents, std::string_view suffix = ".txt") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("edc_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             std::string(suffix));
    std::ofstream out(path_, std::ios::binary);
    out << contents;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Caption-like text: a mix of stopwords, content words and stray punctuation
// with random case and spacing. Length 0..24 chunks.
template <typename Gen>
std::string RandomCaptionText(Gen& gen) {
  static constexpr std::string_view kWords[] = {
      "a",     "The",   "is",     "IN",     "of",   "and",     "for",   "into",   "its",
      "such",  "do",    "yours",  "while",  "with", "over",    "don't", "it's",   "man",
      "dog",   "Water", "flows",  "engine", "rain", "birds",   "car",   "door",   "music",
      "speaking", "loud", "room", "street", "café", "e-mail", "self-driving", "x"};
  static constexpr std::string_view kPunct[] = {"", "", "", ".", ",", "!", "?", "\"", "(", ")", "--", "'"};
  static constexpr std::string_view kSpace[] = {" ", " ", " ", "  ", "\t", "\n"};
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> word(0, std::size(kWords) - 1);
  std::uniform_int_distribution<std::size_t> punct(0, std::size(kPunct) - 1);
  std::uniform_int_distribution<std::size_t> space(0, std::size(kSpace) - 1);
  std::string text;
  const std::size_t n = len(gen);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) text += kSpace[space(gen)];
    text += kPunct[punct(gen)];
    text += kWords[word(gen)];
    text += kPunct[punct(gen)];
  }
  return text;
}

template <typename Gen>
TokenizedCaption RandomClassifiedCaption(Gen& gen, std::uint64_t ordinal) {
  TokenizedCaption c = Tokenize(RandomCaptionText(gen));
  c.source_id = "clip_" + std::to_string(ordinal / 5);
  c.ordinal = ordinal;
  return Classify(std::move(c), DefaultStopwords());
}

}  // namespace edc::testing_util

#endif  // EDC_TESTS_TEST_UTIL_H_
