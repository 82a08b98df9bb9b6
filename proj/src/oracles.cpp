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

#include "wulist/oracles.hpp"

#include <algorithm>

#include "wulist/errors.hpp"

namespace wulist {
namespace {

// base^exp, or 0 on overflow past 2^62.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << 62) / base) return 0;
    out *= base;
  }
  return out;
}

void enforce_cap(std::uint64_t size, std::uint64_t cap) {
  if (size == 0 || size > cap)
    throw UsageError("enumeration exceeds the cap of " + std::to_string(cap));
}

// Base-q digits of idx, least significant first.
std::vector<Elem> digits(std::uint64_t idx, std::uint64_t q, std::size_t len) {
  std::vector<Elem> d(len);
  for (auto& v : d) {
    v = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return d;
}

}  // namespace

std::uint64_t CodebookOracle::size_of(const GrsCode& code) {
  return checked_pow(code.field().order(), static_cast<std::uint64_t>(code.k()));
}

std::uint64_t CodebookOracle::size_of(const GoppaCode& code) {
  return checked_pow(2, static_cast<std::uint64_t>(code.k()));
}

CodebookOracle::CodebookOracle(const GrsCode& code, std::uint64_t cap)
    : n_(static_cast<std::size_t>(code.n())) {
  const std::uint64_t size = size_of(code);
  enforce_cap(size, cap);
  const Field& f = code.field();
  words_.reserve(size);
  for (std::uint64_t idx = 0; idx < size; ++idx)
    words_.push_back(encode(code, Poly(f, digits(idx, f.order(), static_cast<std::size_t>(code.k())))));
}

CodebookOracle::CodebookOracle(const GoppaCode& code, std::uint64_t cap)
    : n_(static_cast<std::size_t>(code.n())) {
  const std::uint64_t size = size_of(code);
  enforce_cap(size, cap);
  words_.reserve(size);
  // Gray code: one generator row per step.
  std::vector<Elem> c(n_, 0);
  words_.push_back(c);
  for (std::uint64_t i = 1; i < size; ++i) {
    const auto row = static_cast<std::size_t>(__builtin_ctzll(i));
    for (std::size_t j = 0; j < n_; ++j) c[j] ^= code.generator()[row][j];
    words_.push_back(c);
  }
  std::sort(words_.begin(), words_.end());
  if (n_ <= 64) {
    packed_.reserve(size);
    for (const auto& w : words_) {
      std::uint64_t b = 0;
      for (std::size_t j = 0; j < n_; ++j) b |= std::uint64_t{w[j]} << j;
      packed_.push_back(b);
    }
  }
}

std::vector<std::vector<Elem>> CodebookOracle::list_within(
    std::span<const Elem> r, int tau, kernels::Exec exec) const {
  if (r.size() != n_) throw UsageError("word length does not match n");
  std::vector<std::size_t> hits;
  if (binary_packed()) {
    std::uint64_t rb = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (r[j] > 1) throw UsageError("binary word expected");
      rb |= std::uint64_t{r[j]} << j;
    }
    hits = kernels::ball_scan_packed(packed_, rb, tau, exec);
  } else {
    hits = kernels::ball_scan(words_, r, tau, exec);
  }
  std::vector<std::vector<Elem>> out;
  out.reserve(hits.size());
  for (auto i : hits) out.push_back(words_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearFactor> exhaustive_factor_search(const HomogPoly& Q,
                                                   HalfInt w1, HalfInt w2,
                                                   std::uint64_t cap,
                                                   kernels::Exec exec) {
  if (Q.is_zero()) throw UsageError("factoring the zero form");
  const Field& f = Q.field();
  const std::uint64_t q = f.order();
  const std::int64_t W1 = w1.floor(), W2 = w2.floor();
  const auto len1 = static_cast<std::size_t>(std::max<std::int64_t>(W1 + 1, 0));
  const auto len2 = static_cast<std::size_t>(std::max<std::int64_t>(W2 + 1, 0));
  const std::uint64_t n1 = checked_pow(q, len1), n2 = checked_pow(q, len2);
  enforce_cap(checked_pow(q, len1 + len2), cap);

  // Index pairs (i1, i2) over all coefficient vectors; keep normalised ones.
  const auto total = static_cast<std::ptrdiff_t>(n1 * n2);
  std::vector<char> hit(static_cast<std::size_t>(total), 0);
  auto test = [&](std::ptrdiff_t idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    Poly f1(f, digits(u / n2, q, len1));
    Poly f2(f, digits(u % n2, q, len2));
    if (f1.is_zero() && f2.is_zero()) return false;
    if (!f1.is_zero() ? f1.lead() != 1 : f2.lead() != 1) return false;
    if (!gcd(f1, f2).is_one()) return false;
    return divides({f1, f2}, Q);
  };
  if (exec == kernels::Exec::serial) {
    for (std::ptrdiff_t i = 0; i < total; ++i) hit[static_cast<std::size_t>(i)] = test(i);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < total; ++i) hit[static_cast<std::size_t>(i)] = test(i);
  }
  std::vector<LinearFactor> out;
  for (std::ptrdiff_t i = 0; i < total; ++i)
    if (hit[static_cast<std::size_t>(i)]) {
      const auto u = static_cast<std::uint64_t>(i);
      out.push_back({Poly(f, digits(u / n2, q, len1)), Poly(f, digits(u % n2, q, len2))});
    }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace wulist
