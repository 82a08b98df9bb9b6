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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "wulist/errors.hpp"
#include "wulist/kernels.hpp"

using namespace wulist;
using namespace wulist::kernels;

TEST(Kernels, EvaluateMany) {
  auto f = Field::make(2, 8);
  std::mt19937 rng(1);
  const Poly p = wulist::testing::random_poly(*f, 40, rng);
  const auto xs = f->elements();
  const auto a = evaluate_many(p, xs, Exec::serial);
  EXPECT_EQ(a, evaluate_many(p, xs, Exec::parallel));
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(a[i], p.eval(xs[i]));
}

TEST(Kernels, FieldRoots) {
  auto f = Field::make(13, 1);
  const std::vector<Elem> roots{2, 5, 11};
  const Poly p = Poly::from_roots(*f, roots) * (Poly::x(*f) * Poly::x(*f) + Poly::constant(*f, 2));
  EXPECT_EQ(field_roots(p, Exec::serial), roots);
  EXPECT_EQ(field_roots(p, Exec::parallel), roots);
  EXPECT_THROW(field_roots(Poly(*f)), UsageError);
}

TEST(Kernels, BallScan) {
  std::mt19937 rng(2);
  std::vector<std::vector<Elem>> words(500, std::vector<Elem>(10));
  for (auto& w : words)
    for (auto& v : w) v = rng() % 3;
  const std::vector<Elem> r(10, 1);
  const auto a = ball_scan(words, r, 4, Exec::serial);
  EXPECT_EQ(a, ball_scan(words, r, 4, Exec::parallel));
  for (std::size_t i = 0, j = 0; i < words.size(); ++i) {
    int d = 0;
    for (int k = 0; k < 10; ++k) d += words[i][k] != 1;
    if (d <= 4) EXPECT_EQ(a[j++], i);
  }
  EXPECT_THROW(ball_scan(words, std::vector<Elem>(3, 0), 1), UsageError);
}

TEST(Kernels, PackedBallScan) {
  std::mt19937_64 rng(3);
  std::vector<std::uint64_t> words(2000);
  for (auto& w : words) w = rng();
  const std::uint64_t r = rng();
  const auto a = ball_scan_packed(words, r, 28, Exec::serial);
  EXPECT_EQ(a, ball_scan_packed(words, r, 28, Exec::parallel));
  EXPECT_FALSE(a.empty());
  for (auto i : a) EXPECT_LE(__builtin_popcountll(words[i] ^ r), 28);
}
