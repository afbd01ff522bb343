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

#ifndef EDC_TEXT_H_
#define EDC_TEXT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace edc {

// A caption split into normalized word tokens.
//
// `stopword_mask` stays empty until Classify() runs; once set it is parallel
// to `tokens`. `ordinal` is the caption's stable position in its corpus and
// selects its random stream.
struct TokenizedCaption {
  std::vector<std::string> tokens;
  std::optional<std::vector<bool>> stopword_mask;
  std::string source_id;
  std::uint64_t ordinal = 0;

  bool classified() const { return stopword_mask.has_value(); }

  friend bool operator==(const TokenizedCaption&, const TokenizedCaption&) = default;
};

// An immutable set of lowercase removable words with a tag naming its origin.
class StopwordSet {
 public:
  // Throws InvalidArgument if `words` is empty or any entry is empty, holds
  // whitespace or uppercase ASCII.
  StopwordSet(std::set<std::string, std::less<>> words, std::string version_tag);

  bool Contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }
  const std::string& version_tag() const { return version_tag_; }

  // FNV-1a 64 over the sorted words, each followed by '\n'.
  std::uint64_t ContentHash() const;

 private:
  std::set<std::string, std::less<>> words_;
  std::string version_tag_;
};

// Snapshot of the NLTK English stopword list compiled into the library.
const StopwordSet& DefaultStopwords();

inline constexpr std::string_view kDefaultStopwordsTag = "nltk-english-179";
inline constexpr std::size_t kDefaultStopwordsSize = 179;

// Returns DefaultStopwords() when `path` is empty. Otherwise reads a UTF-8
// file with one word per line ('#' starts a comment line), lowercases and
// deduplicates. Throws IoError when unreadable, ParseError when no words
// remain or a line holds more than one word.
StopwordSet LoadStopwords(const std::optional<std::filesystem::path>& path);

// Splits on ASCII whitespace, lowercases ASCII letters, strips the characters
// . , ! ? ; : ' " ( ) - from both ends of each chunk and drops chunks that end
// up empty. The mask is left unset.
TokenizedCaption Tokenize(std::string_view text);

// Returns `caption` with stopword_mask[i] = sw.Contains(tokens[i]).
TokenizedCaption Classify(TokenizedCaption caption, const StopwordSet& sw);

// ASCII-only lowercase; bytes >= 0x80 pass through untouched.
std::string AsciiLower(std::string_view s);

}  // namespace edc

#endif  // EDC_TEXT_H_
