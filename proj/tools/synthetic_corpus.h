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

#ifndef EDC_TOOLS_SYNTHETIC_CORPUS_H_
#define EDC_TOOLS_SYNTHETIC_CORPUS_H_

// Deterministic generator for the benchmark caption corpus shipped under
// tests/data. Captions hold 8 to 20 words, about 40% of them stopwords, five
// captions per synthetic clip.

#include <cstdint>
#include <cstdio>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "edc/corpus.h"
#include "edc/rng.h"

namespace edc::synthetic {

inline constexpr std::uint64_t kSeed = 20220223;
inline constexpr std::size_t kCaptions = 1000;
inline constexpr double kStopwordRatio = 0.40;

inline constexpr std::string_view kStopwordPool[] = {
    "a",     "the",   "is",   "in",    "of",    "and",   "on",   "with",  "while", "as",
    "by",    "to",    "from", "into",  "for",   "its",   "over", "at",    "an",    "are",
    "being", "then",  "some", "very",  "it",    "there", "this", "that",  "they",  "before",
    "after", "under", "up",   "down",  "out",   "off",   "more", "other", "such",  "during"};

inline constexpr std::string_view kContentPool[] = {
    "man",       "woman",     "child",     "dog",       "bird",      "birds",     "car",
    "cars",      "truck",     "train",     "engine",    "motor",     "water",     "rain",
    "wind",      "thunder",   "storm",     "river",     "stream",    "waves",     "ocean",
    "door",      "footsteps", "people",    "crowd",     "voices",    "music",     "piano",
    "guitar",    "drum",      "bell",      "bells",     "clock",     "machine",   "fan",
    "vacuum",    "cleaner",   "kitchen",   "dishes",    "glass",     "metal",     "wood",
    "paper",     "leaves",    "gravel",    "snow",      "fire",      "crackling", "buzzing",
    "humming",   "chirping",  "barking",   "speaking",  "talking",   "laughing",  "crying",
    "singing",   "whistling", "walking",   "running",   "driving",   "passing",   "flowing",
    "splashing", "dripping",  "knocking",  "tapping",   "ringing",   "beeping",   "honking",
    "rustling",  "blowing",   "falling",   "closing",   "opening",   "slamming",  "rolling",
    "loud",      "quiet",     "soft",      "distant",   "nearby",    "heavy",     "light",
    "large",     "small",     "busy",      "empty",     "outdoor",   "indoor",    "room",
    "street",    "road",      "park",      "forest",    "city",      "station",   "building",
    "hallway",   "background", "foreground", "continuously", "repeatedly", "slowly", "quickly",
    "steadily",  "suddenly",  "frog",      "cat",       "cow",       "sheep",     "horse",
    "airplane",  "helicopter", "boat",     "siren",     "alarm",     "phone",     "television",
    "radio"};

inline std::size_t PickIndex(RngStream& rng, std::size_t n) {
  return static_cast<std::size_t>(rng.NextUniform() * static_cast<double>(n));
}

// Returns the corpus; record i belongs to clip i / 5.
inline Corpus Generate() {
  Corpus corpus;
  corpus.records.reserve(kCaptions);
  RngStream rng(kSeed);
  for (std::size_t i = 0; i < kCaptions; ++i) {
    const std::size_t length = 8 + PickIndex(rng, 13);
    std::string text;
    for (std::size_t w = 0; w < length; ++w) {
      const bool stop = rng.NextUniform() < kStopwordRatio;
      const std::string_view word = stop ? kStopwordPool[PickIndex(rng, std::size(kStopwordPool))]
                                         : kContentPool[PickIndex(rng, std::size(kContentPool))];
      if (w > 0) text.push_back(' ');
      text += word;
    }
    if (!text.empty()) text[0] = static_cast<char>(text[0] - 'a' + 'A');
    text.push_back('.');

    char id[32];
    std::snprintf(id, sizeof(id), "clip_%04zu.wav", i / 5);
    corpus.records.push_back(CaptionRecord{id, 0, std::move(text)});
  }
  return corpus;
}

}  // namespace edc::synthetic

#endif  // EDC_TOOLS_SYNTHETIC_CORPUS_H_
