// Copyright 2026 The wulist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WULIST_RNG_HPP
#define WULIST_RNG_HPP

#include <cstdint>

namespace wulist {

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D), seeded
/// through one splitmix64 step so that small seeds give unrelated streams.
///
/// Everything the CLI draws goes through next() and below(), so a given seed
/// reproduces byte-identical output in any implementation of the two
/// generators.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// next() % bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace wulist

#endif  // WULIST_RNG_HPP
