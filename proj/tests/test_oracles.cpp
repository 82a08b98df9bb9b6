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
#include "wulist/oracles.hpp"

using namespace wulist;
using wulist::testing::random_poly;

TEST(Oracles, GrsCodebook) {
  const GrsCode code = GrsCode::standard(Field::make(13, 1), 12, 3);
  const CodebookOracle book(code);
  EXPECT_EQ(book.size(), 2197u);
  EXPECT_FALSE(book.binary_packed());
  const auto& c = book.words()[100];
  EXPECT_EQ(book.list_within(c, 0), std::vector<std::vector<Elem>>{c});
  EXPECT_EQ(book.list_within(c, 12).size(), 2197u);
  EXPECT_THROW(CodebookOracle(code, 1000), UsageError);
  EXPECT_THROW(book.list_within(std::vector<Elem>(5, 0), 2), UsageError);
}

TEST(Oracles, GoppaCodebookClosedUnderAddition) {
  auto f = Field::make(2, 5);
  std::vector<Elem> sup(32);
  for (Elem i = 0; i < 32; ++i) sup[i] = i;
  const GoppaCode code(f, random_goppa_poly(*f, 3, 1), sup);
  const CodebookOracle book(code);
  EXPECT_EQ(book.size(), std::size_t{1} << code.k());
  EXPECT_TRUE(book.binary_packed());
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto& a = book.words()[rng() % book.size()];
    const auto& b = book.words()[rng() % book.size()];
    std::vector<Elem> s(32);
    for (int j = 0; j < 32; ++j) s[j] = a[j] ^ b[j];
    EXPECT_TRUE(std::binary_search(book.words().begin(), book.words().end(), s));
  }
  for (const auto& w : book.words()) EXPECT_TRUE(is_member(code, w));
  // Packed scan agrees with the generic one.
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> r(32);
    for (auto& v : r) v = rng() & 1;
    const auto hits = kernels::ball_scan(book.words(), r, 5);
    std::vector<std::vector<Elem>> want;
    for (auto h : hits) want.push_back(book.words()[h]);
    EXPECT_EQ(book.list_within(r, 5), want);
    EXPECT_EQ(book.list_within(r, 5, kernels::Exec::parallel), want);
  }
}

TEST(Oracles, FactorSearchTrivial) {
  auto f = Field::make(5, 1);
  // Q = z^3
  HomogPoly Q = HomogPoly::monomial(Poly::constant(*f, 1), 0, 3);
  const auto facs = exhaustive_factor_search(Q, HalfInt(1), HalfInt(1));
  ASSERT_EQ(facs.size(), 1u);
  EXPECT_TRUE(facs[0].f1.is_zero());
  EXPECT_TRUE(facs[0].f2.is_one());
  EXPECT_THROW(exhaustive_factor_search(Q, HalfInt(5), HalfInt(5), 1000), UsageError);
}

TEST(Oracles, FactorSearchPlanted) {
  auto f = Field::make(5, 1);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f1 = random_poly(*f, 1, rng), f2 = random_poly(*f, 1, rng);
    if (!gcd(f1, f2).is_one()) continue;
    const HomogPoly lin(1, {f2, f1});
    const HomogPoly Q = lin * HomogPoly(1, {random_poly(*f, 2, rng, true), random_poly(*f, 1, rng)});
    const auto facs = exhaustive_factor_search(Q, HalfInt(1), HalfInt(1));
    Poly n1 = f1, n2 = f2;
    const Elem c = !f1.is_zero() ? f1.lead() : f2.lead();
    n1 = f1.scaled(f->inv(c));
    n2 = f2.scaled(f->inv(c));
    EXPECT_NE(std::find(facs.begin(), facs.end(), LinearFactor{n1, n2}), facs.end());
  }
}

TEST(Oracles, FactorSearchAgreesWithRootFinding) {
  std::mt19937 rng(5);
  auto f = Field::make(5, 1);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int ell = 1 + static_cast<int>(rng() % 3);
    const HalfInt w1 = HalfInt::from_twice(static_cast<int>(rng() % 4) - 1);
    const HalfInt w2 = HalfInt::from_twice(static_cast<int>(rng() % 4) - 1);
    // Product of planted linear forms and a random cofactor.
    HomogPoly Q = HomogPoly::monomial(Poly::constant(*f, 1), 0, 0);
    int left = ell;
    while (left > 0 && rng() % 3 != 0) {
      const HomogPoly lin(1, {random_poly(*f, 1, rng), random_poly(*f, 1, rng)});
      if (lin.is_zero()) continue;
      Q = Q * lin;
      --left;
    }
    if (left > 0) {
      std::vector<Poly> c(static_cast<std::size_t>(left + 1));
      for (auto& p : c) p = random_poly(*f, 2, rng);
      c[0] += Poly::constant(*f, 1);
      Q = Q * HomogPoly(left, c);
    }
    if (Q.is_zero()) continue;
    const auto fast = find_linear_factors(Q, w1, w2);
    const auto slow = exhaustive_factor_search(Q, w1, w2);
    EXPECT_EQ(fast, slow);
    nontrivial += !slow.empty();
  }
  EXPECT_GT(nontrivial, 20);
}

TEST(Oracles, FactorSearchSerialEqualsParallel) {
  auto f = Field::make(7, 1);
  std::mt19937 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    HomogPoly Q = HomogPoly(1, {random_poly(*f, 1, rng), random_poly(*f, 1, rng, true)}) *
                  HomogPoly(1, {random_poly(*f, 1, rng, true), random_poly(*f, 1, rng)});
    EXPECT_EQ(exhaustive_factor_search(Q, HalfInt(1), HalfInt(1), 1 << 20, kernels::Exec::serial),
              exhaustive_factor_search(Q, HalfInt(1), HalfInt(1), 1 << 20, kernels::Exec::parallel));
  }
}
