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

#include "wulist/kernels.hpp"

#include <bit>

#include "wulist/errors.hpp"

namespace wulist::kernels {
namespace {

bool within(const std::vector<Elem>& w, std::span<const Elem> r, int tau) {
  int dist = 0;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (w[j] != r[j] && ++dist > tau) return false;
  return true;
}

// Keeps indices whose flag is set, in order.
std::vector<std::size_t> collect(const std::vector<char>& hit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Elem> evaluate_many(const Poly& p, std::span<const Elem> xs,
                                Exec exec) {
  std::vector<Elem> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = p.eval(xs[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = p.eval(xs[i]);
  }
  return out;
}

std::vector<Elem> field_roots(const Poly& p, Exec exec) {
  if (p.is_zero()) throw UsageError("roots of the zero polynomial");
  const Field& f = p.field();
  const auto q = static_cast<std::ptrdiff_t>(f.order());
  std::vector<char> hit(f.order(), 0);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t a = 0; a < q; ++a) hit[a] = p.eval(static_cast<Elem>(a)) == 0;
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < q; ++a) hit[a] = p.eval(static_cast<Elem>(a)) == 0;
  }
  std::vector<Elem> out;
  for (std::size_t a = 0; a < hit.size(); ++a)
    if (hit[a]) out.push_back(static_cast<Elem>(a));
  return out;
}

std::vector<std::size_t> ball_scan(const std::vector<std::vector<Elem>>& words,
                                   std::span<const Elem> r, int tau, Exec exec) {
  for (const auto& w : words)
    if (w.size() != r.size()) throw UsageError("ball_scan: word length mismatch");
  std::vector<char> hit(words.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) hit[i] = within(words[i], r, tau);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) hit[i] = within(words[i], r, tau);
  }
  return collect(hit);
}

std::vector<std::size_t> ball_scan_packed(std::span<const std::uint64_t> words,
                                          std::uint64_t r, int tau, Exec exec) {
  std::vector<char> hit(words.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) hit[i] = std::popcount(words[i] ^ r) <= tau;
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) hit[i] = std::popcount(words[i] ^ r) <= tau;
  }
  return collect(hit);
}

}  // namespace wulist::kernels
