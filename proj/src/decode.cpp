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

#include "wulist/decode.hpp"

#include <cmath>

#include "wulist/errors.hpp"

namespace wulist {

std::string to_string(DecodePath p) {
  return p == DecodePath::unique ? "unique" : "list";
}

std::string to_string(ParamsMode m) {
  switch (m) {
    case ParamsMode::unique_only: return "unique";
    case ParamsMode::list: return "list";
    case ParamsMode::infeasible: break;
  }
  return "infeasible";
}

double n_minus_sqrt(std::int64_t n, std::int64_t N) {
  const auto nd = static_cast<double>(n), Nd = static_cast<double>(N);
  const double s = std::sqrt(Nd);
  if (s == 0) return nd;
  // sqrt(N) = s + lo to about 106 bits; the fma residual is exact.
  const double lo = std::fma(-s, s, Nd) / (2 * s);
  // Two-sum of n and -s.
  const double h = nd - s;
  const double bb = h - nd;
  const double l = (nd - (h - bb)) + (-s - bb);
  return h + (l - lo);
}

std::size_t hamming(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.size() != b.size()) throw UsageError("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace wulist
