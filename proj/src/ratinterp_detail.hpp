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

#ifndef WULIST_SRC_RATINTERP_DETAIL_HPP
#define WULIST_SRC_RATINTERP_DETAIL_HPP

#include <vector>

#include "wulist/poly.hpp"

namespace wulist::detail {

/// Pascal's triangle up to row n, reduced into the prime subfield.
std::vector<std::vector<Elem>> binomials(int n, const Field& f);

/// Coefficients of sum_i coeffs[i] (W + c)^i in powers of W.
std::vector<Poly> shift_variable(const std::vector<Poly>& coeffs, Elem c,
                                 const Field& f);

}  // namespace wulist::detail

#endif  // WULIST_SRC_RATINTERP_DETAIL_HPP
