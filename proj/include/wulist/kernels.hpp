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

#ifndef WULIST_KERNELS_HPP
#define WULIST_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wulist/poly.hpp"

namespace wulist::kernels {

/// Serial reference or OpenMP-parallel execution. Results are identical.
enum class Exec { serial, parallel };

/// p(xs[i]) for every i.
std::vector<Elem> evaluate_many(const Poly& p, std::span<const Elem> xs,
                                Exec exec = Exec::serial);

/// Every field element at which p vanishes, ascending. p must be nonzero.
std::vector<Elem> field_roots(const Poly& p, Exec exec = Exec::serial);

/// Indices i with Hamming distance(words[i], r) <= tau, ascending.
std::vector<std::size_t> ball_scan(const std::vector<std::vector<Elem>>& words,
                                   std::span<const Elem> r, int tau,
                                   Exec exec = Exec::serial);

/// Same for binary words packed into 64-bit masks (bit i = coordinate i).
std::vector<std::size_t> ball_scan_packed(std::span<const std::uint64_t> words,
                                          std::uint64_t r, int tau,
                                          Exec exec = Exec::serial);

}  // namespace wulist::kernels

#endif  // WULIST_KERNELS_HPP
