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

#ifndef WULIST_ORACLES_HPP
#define WULIST_ORACLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wulist/goppa.hpp"
#include "wulist/grs.hpp"
#include "wulist/kernels.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {

inline constexpr std::uint64_t kDefaultCodebookCap = std::uint64_t{1} << 20;

/// Every codeword of a small code, for brute-force nearest-word searches.
class CodebookOracle {
 public:
  /// q^k messages in lexicographic order. UsageError above the cap.
  CodebookOracle(const GrsCode& code, std::uint64_t cap = kDefaultCodebookCap);
  /// All 2^k combinations of the generator rows. UsageError above the cap.
  CodebookOracle(const GoppaCode& code, std::uint64_t cap = kDefaultCodebookCap);

  /// Codebook size q^k, or 0 when it does not fit in 64 bits.
  static std::uint64_t size_of(const GrsCode& code);
  static std::uint64_t size_of(const GoppaCode& code);

  std::size_t size() const { return words_.size(); }
  const std::vector<std::vector<Elem>>& words() const { return words_; }
  bool binary_packed() const { return !packed_.empty(); }

  /// {c : d(r, c) <= tau}, sorted.
  std::vector<std::vector<Elem>> list_within(
      std::span<const Elem> r, int tau,
      kernels::Exec exec = kernels::Exec::serial) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Elem>> words_;
  std::vector<std::uint64_t> packed_;  // binary codes with n <= 64
};

/// All normalised coprime (f1, f2) with deg f_i <= floor(w_i) and
/// (y f1 + z f2) | Q, by trial division over every candidate pair. Throws
/// UsageError when q^(floor(w1) + floor(w2) + 2) exceeds the cap.
std::vector<LinearFactor> exhaustive_factor_search(
    const HomogPoly& Q, HalfInt w1, HalfInt w2,
    std::uint64_t cap = kDefaultCodebookCap,
    kernels::Exec exec = kernels::Exec::serial);

}  // namespace wulist

#endif  // WULIST_ORACLES_HPP
