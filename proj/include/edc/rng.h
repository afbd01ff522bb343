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

#ifndef EDC_RNG_H_
#define EDC_RNG_H_

#include <cstdint>

namespace edc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kOrdinalGamma = 0xBF58476D1CE4E5B9ULL;

// splitmix64 output finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// splitmix64 generator. The sequence depends only on the initial state, so it
// is identical on every platform and compiler.
class RngStream {
 public:
  constexpr explicit RngStream(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t NextU64() {
    state_ += kGoldenGamma;
    return Mix64(state_);
  }

  // Uniform in [0, 1) on a 2^-53 grid.
  constexpr double NextUniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Stream dedicated to one caption at one epoch:
//   state = Mix64(Mix64(seed ^ G * (epoch + 1)) ^ C * (ordinal + 1))
constexpr RngStream DeriveStream(std::uint64_t seed, std::uint64_t epoch, std::uint64_t ordinal) {
  const std::uint64_t inner = Mix64(seed ^ (kGoldenGamma * (epoch + 1)));
  return RngStream(Mix64(inner ^ (kOrdinalGamma * (ordinal + 1))));
}

}  // namespace edc

#endif  // EDC_RNG_H_
