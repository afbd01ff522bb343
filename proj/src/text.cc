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

#include "edc/text.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "edc/error.h"

namespace edc {

// Generated from data/stopwords/english.txt at configure time.
extern const std::string_view kEmbeddedStopwordsText;

namespace {

constexpr std::string_view kEdgePunctuation = ".,!?;:'\"()-";

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsEdgePunctuation(char c) { return kEdgePunctuation.find(c) != std::string_view::npos; }

std::string_view TrimSpace(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::set<std::string, std::less<>> ParseStopwordLines(std::string_view text,
                                                      const std::string& source) {
  std::set<std::string, std::less<>> words;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);

    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    line = TrimSpace(line);
    if (line.empty() || line.front() == '#') continue;
    for (char c : line) {
      if (IsAsciiSpace(c)) throw ParseError(source, line_no, "expected one word per line");
    }
    words.insert(AsciiLower(line));
  }
  if (words.empty()) throw ParseError(source, 0, "stopword list is empty");
  return words;
}

}  // namespace

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

StopwordSet::StopwordSet(std::set<std::string, std::less<>> words, std::string version_tag)
    : words_(std::move(words)), version_tag_(std::move(version_tag)) {
  if (words_.empty()) throw InvalidArgument("stopword set must not be empty");
  for (const auto& w : words_) {
    if (w.empty()) throw InvalidArgument("stopword set contains an empty word");
    for (char c : w) {
      if (IsAsciiSpace(c) || (c >= 'A' && c <= 'Z')) {
        throw InvalidArgument("stopword '" + w + "' must be lowercase without whitespace");
      }
    }
  }
}

std::uint64_t StopwordSet::ContentHash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (const auto& w : words_) {
    for (char c : w) feed(static_cast<unsigned char>(c));
    feed('\n');
  }
  return h;
}

const StopwordSet& DefaultStopwords() {
  static const StopwordSet kSet(ParseStopwordLines(kEmbeddedStopwordsText, "<embedded>"),
                                std::string(kDefaultStopwordsTag));
  return kSet;
}

StopwordSet LoadStopwords(const std::optional<std::filesystem::path>& path) {
  if (!path) return DefaultStopwords();
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw IoError("cannot open stopword file " + path->string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading stopword file " + path->string());
  const std::string text = buf.str();
  return StopwordSet(ParseStopwordLines(text, path->string()), "file:" + path->string());
}

TokenizedCaption Tokenize(std::string_view text) {
  TokenizedCaption caption;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsAsciiSpace(text[j])) ++j;
    std::string_view chunk = text.substr(i, j - i);
    while (!chunk.empty() && IsEdgePunctuation(chunk.front())) chunk.remove_prefix(1);
    while (!chunk.empty() && IsEdgePunctuation(chunk.back())) chunk.remove_suffix(1);
    if (!chunk.empty()) caption.tokens.push_back(AsciiLower(chunk));
    i = j;
  }
  return caption;
}

TokenizedCaption Classify(TokenizedCaption caption, const StopwordSet& sw) {
  std::vector<bool> mask;
  mask.reserve(caption.tokens.size());
  for (const auto& token : caption.tokens) mask.push_back(sw.Contains(token));
  caption.stopword_mask = std::move(mask);
  return caption;
}

}  // namespace edc
