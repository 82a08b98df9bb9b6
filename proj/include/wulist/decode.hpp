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

#ifndef WULIST_DECODE_HPP
#define WULIST_DECODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wulist/galois.hpp"
#include "wulist/halfint.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {

/// One decoded codeword with the error pattern that separates it from r.
struct Candidate {
  std::vector<Elem> codeword;
  std::vector<std::size_t> error_positions;  // ascending
  std::vector<Elem> error_values;            // r - codeword at those positions
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class DecodePath { unique, list };
std::string to_string(DecodePath p);

/// All codewords within the radius, ordered by codeword. Empty means Fail.
struct DecodeOutput {
  std::vector<Candidate> candidates;
  int tau = 0;
  int ell = 0;  // 0 when no interpolation was set up
  int s = 0;
  DecodePath path = DecodePath::unique;
  /// The word found by the error-locator shortcut, if it fired.
  std::optional<std::vector<Elem>> shortcut_word;

  bool fail() const { return candidates.empty(); }
};

struct DecodeOptions {
  int ell_max = 64;
  /// Use these (s, ell) instead of searching; still checked for validity.
  std::optional<Multiplicities> forced;
};

enum class ParamsMode { unique_only, list, infeasible };
std::string to_string(ParamsMode m);

/// Outcome of the parameter search for a decoding radius.
struct ParamsReport {
  ParamsMode mode = ParamsMode::infeasible;
  int tau = 0;
  int s = 0;
  int ell = 0;
  HalfInt w_total;
  std::string reason;  // why infeasible, empty otherwise
};

/// n - sqrt(N) rounded to nearest, for 0 <= N <= n^2 < 2^52.
double n_minus_sqrt(std::int64_t n, std::int64_t N);

/// Hamming distance between equal-length words.
std::size_t hamming(const std::vector<Elem>& a, const std::vector<Elem>& b);

}  // namespace wulist

#endif  // WULIST_DECODE_HPP
