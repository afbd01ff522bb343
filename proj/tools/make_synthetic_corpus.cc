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

// Writes the synthetic benchmark corpus as JSONL to stdout.

#include <iostream>

#include "json.hpp"
#include "synthetic_corpus.h"

int main() {
  for (const auto& r : edc::synthetic::Generate().records) {
    nlohmann::ordered_json line{{"id", r.source_id}, {"caption", r.text}};
    std::cout << line.dump() << '\n';
  }
  return 0;
}
