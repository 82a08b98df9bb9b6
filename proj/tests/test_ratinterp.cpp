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

#include "test_util.hpp"
#include "wulist/errors.hpp"
#include "wulist/ratinterp.hpp"

using namespace wulist;
using wulist::testing::random_points;
using wulist::testing::random_poly;

TEST(Feasible, Examples) {
  EXPECT_TRUE(feasible(12, 6, 2, 4, HalfInt(2)));
  EXPECT_FALSE(feasible(12, 6, 1, 2, HalfInt(2)));
  EXPECT_THROW(feasible(RatParams{12, 6, 0, 4, 1, 1}), UsageError);
  EXPECT_THROW(feasible(RatParams{12, 6, 2, 1, 1, 1}), UsageError);
}

TEST(ChooseParams, Examples) {
  auto grs = choose_params(12, 6, HalfInt(2), 64, ListConstraint::ell_ge_s);
  ASSERT_TRUE(grs);
  EXPECT_EQ(*grs, (Multiplicities{2, 4}));
  auto gop = choose_params(64, 7, HalfInt::half_of(1), 64, ListConstraint::ell_gt_2s);
  ASSERT_TRUE(gop);
  EXPECT_EQ(*gop, (Multiplicities{2, 21}));
  EXPECT_FALSE(choose_params(12, 6, HalfInt(2), 0, ListConstraint::ell_ge_s));
}

TEST(ChooseParams, GoppaExampleByHand) {
  // 32 s(s+1) < 7 s (ell+1) - ell(ell+1)/4, times 4.
  auto ok = [](int s, int ell) {
    return 128 * s * (s + 1) < 28 * s * (ell + 1) - ell * (ell + 1);
  };
  EXPECT_TRUE(ok(2, 21));
  for (int ell = 5; ell < 21; ++ell) EXPECT_FALSE(ok(2, ell));
  for (int ell = 3; ell < 200; ++ell) EXPECT_FALSE(ok(1, ell));
}

TEST(Basis, ExponentsSumToEll) {
  for (int ell = 1; ell < 9; ++ell)
    for (int s = 1; s <= ell; ++s)
      for (int j = 0; j <= ell; ++j) {
        BasisExponents e = basis_exponents(j, s, ell);
        EXPECT_GE(e.b, 0);
        EXPECT_EQ(e.a + 2 * e.b + e.c + e.d + e.e, ell);
        EXPECT_EQ(e.a + e.b + e.d, ell - j);
      }
}

TEST(Basis, ClassicalDegreeOneModule) {
  auto f = Field::make(13, 1);
  std::vector<InterpPoint> pts{{1, 4, 1}, {2, 7, 1}, {5, 0, 1}, {9, 12, 1}};
  auto [ctx, basis] = build_basis(pts, 1, 1, *f);
  EXPECT_TRUE(ctx.g_z.is_one());
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], HomogPoly(1, {-ctx.R_y, Poly::constant(*f, 1)}));
  EXPECT_EQ(basis[1], HomogPoly(1, {ctx.G, Poly(*f)}));
}

TEST(Basis, ContextInvariants) {
  std::mt19937 rng(41);
  auto f = Field::make(2, 4);
  for (int it = 0; it < 40; ++it) {
    auto pts = random_points(*f, 1 + rng() % 10, rng);
    BasisContext c = make_basis_context(pts, *f);
    EXPECT_TRUE((c.G % c.g_z).is_zero());
    EXPECT_EQ(c.lambda1 * c.G + c.lambda2 * c.R_z, c.g_z);
    for (const auto& p : pts) {
      EXPECT_EQ(c.upsilon.eval(p.x), f->mul(c.lambda2.eval(p.x), p.y));
      EXPECT_EQ(c.g_z.eval(p.x) == 0, p.z == 0);
    }
  }
}

TEST(Basis, EveryElementHasFullMultiplicity) {
  std::mt19937 rng(43);
  for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
    for (int it = 0; it < 25; ++it) {
      const int ell = 1 + static_cast<int>(rng() % 6);
      const int s = 1 + static_cast<int>(rng() % std::min(ell, 3));
      auto pts = random_points(*f, 1 + rng() % 10, rng);
      auto [ctx, basis] = build_basis(pts, s, ell, *f);
      ASSERT_EQ(basis.size(), static_cast<std::size_t>(ell + 1));
      for (int j = 0; j <= ell; ++j) {
        ASSERT_EQ(basis[static_cast<std::size_t>(j)].ell(), ell);
        ASSERT_EQ(basis[static_cast<std::size_t>(j)].ydegree(), ell - j);
        for (const auto& p : pts)
          ASSERT_TRUE(check_multiplicity(basis[static_cast<std::size_t>(j)], p, s));
      }
    }
  }
}

TEST(Multiplicity, Examples) {
  auto f = Field::make(13, 1);
  const int ell = 3;
  Poly ry(*f, {3, 1});  // passes through (2, 5)
  HomogPoly line(1, {-ry, Poly::constant(*f, 1)});
  HomogPoly Q = line * HomogPoly::monomial(Poly::constant(*f, 1), 0, ell - 1);
  EXPECT_TRUE(check_multiplicity(Q, {2, 5, 1}, 1));
  EXPECT_FALSE(check_multiplicity(Q, {2, 6, 1}, 1));
  HomogPoly zl = HomogPoly::monomial(Poly::constant(*f, 1), 0, ell);
  for (int s = 1; s <= ell; ++s) EXPECT_TRUE(check_multiplicity(zl, {4, 1, 0}, s));
  EXPECT_FALSE(check_multiplicity(zl, {4, 1, 0}, ell + 1));
}

TEST(RowReduce, IdentityUnchanged) {
  auto f = Field::make(13, 1);
  PolyMatrix id(3, std::vector<Poly>(3, Poly(*f)));
  for (int i = 0; i < 3; ++i) id[i][i] = Poly::constant(*f, 1);
  std::vector<std::int64_t> zero(3, 0);
  RowReduction r = row_reduce(id, zero);
  EXPECT_EQ(r.reduced, id);
}

TEST(RowReduce, SmallExample) {
  auto f = Field::make(13, 1);
  Poly x = Poly::x(*f);
  PolyMatrix m{{x * x, x}, {x * x * x, Poly::constant(*f, 1)}};
  std::vector<std::int64_t> zero(2, 0);
  RowReduction r = row_reduce(m, zero, true);
  EXPECT_TRUE(is_weak_popov(r.reduced, zero));
  EXPECT_LE(r.row_degrees_twice[r.shortest_row], 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Poly acc(*f);
      for (std::size_t k = 0; k < 2; ++k) acc += r.transform[i][k] * m[k][j];
      EXPECT_EQ(acc, r.reduced[i][j]);
    }
  // det is preserved up to a unit.
  Poly d0 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly d1 = r.reduced[0][0] * r.reduced[1][1] - r.reduced[0][1] * r.reduced[1][0];
  EXPECT_EQ(d0.monic(), d1.monic());
}

TEST(RowReduce, SingularIsUsageError) {
  auto f = Field::make(13, 1);
  Poly x = Poly::x(*f);
  PolyMatrix m{{x, x}, {x, x}};
  std::vector<std::int64_t> zero(2, 0);
  EXPECT_THROW(row_reduce(m, zero), UsageError);
}

TEST(Interpolate, MatchesNaiveMinimum) {
  std::mt19937 rng(47);
  int done = 0;
  for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
    for (int it = 0; it < 60; ++it) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const int ell = 1 + static_cast<int>(rng() % 5);
      const int s = 1 + static_cast<int>(rng() % std::min(ell, 3));
      RatParams p{n, 0, s, ell, HalfInt::from_twice(rng() % 5),
                  HalfInt::from_twice(rng() % 5)};
      // Smallest tau that makes the instance feasible.
      while (!feasible(p) && p.tau < 4 * n + 8) ++p.tau;
      if (!feasible(p)) continue;
      auto pts = random_points(*f, static_cast<std::size_t>(n), rng);
      HomogPoly Q = interpolate(pts, p, *f);
      auto [best, witness] = naive_min_interpolant(pts, p, *f);
      ASSERT_EQ(Q.wdeg_twice(p.w1, p.w2), best);
      ASSERT_EQ(witness.wdeg_twice(p.w1, p.w2), best);
      auto naive = naive_interpolate(pts, p, *f);
      ASSERT_TRUE(naive);
      for (const auto& pt : pts) {
        ASSERT_TRUE(check_multiplicity(Q, pt.normalized(*f), s));
        ASSERT_TRUE(check_multiplicity(*naive, pt.normalized(*f), s));
      }
      ++done;
    }
  }
  EXPECT_GT(done, 80);
}

TEST(Interpolate, PiEntriesBoundedBySn) {
  std::mt19937 rng(53);
  auto f = Field::make(13, 1);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int ell = 1 + static_cast<int>(rng() % 6);
    const int s = 1 + static_cast<int>(rng() % std::min(ell, 3));
    auto pts = random_points(*f, static_cast<std::size_t>(n), rng);
    auto [ctx, basis] = build_basis(pts, s, ell, *f);
    for (const auto& b : basis) ASSERT_LE(b.max_xdeg(), s * n);
  }
}

TEST(Interpolate, DowngradedParametersStillHold) {
  std::mt19937 rng(59);
  auto f = Field::make(13, 1);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    auto pts = random_points(*f, 10, rng);
    RatParams p{10, 7, 2, 4, HalfInt(1), HalfInt(1)};
    if (!feasible(p)) continue;
    HomogPoly Q = interpolate(pts, p, *f);
    // Lower tau by dt and both weights by at least (s/ell) dt.
    for (int dt = 1; dt <= 2; ++dt) {
      HalfInt drop = HalfInt::from_twice((2 * p.s * dt + p.ell - 1) / p.ell);
      HalfInt w1 = p.w1 - drop, w2 = p.w2 - drop;
      ASSERT_LT(Q.wdeg_twice(w1, w2), 2 * std::int64_t{p.s} * (p.tau - dt));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Naive, ConstraintCount) {
  std::mt19937 rng(61);
  auto f = Field::make(13, 1);
  for (int s = 1; s <= 3; ++s)
    for (std::size_t n = 1; n <= 8; ++n) {
      auto pts = random_points(*f, n, rng);
      std::vector<int> caps(4, 5);
      NaiveSystem sys = naive_system(pts, s, 3, caps, *f);
      EXPECT_EQ(sys.rows.size(), n * static_cast<std::size_t>(s * (s + 1) / 2));
    }
  std::vector<InterpPoint> one{{3, 4, 1}};
  auto sol = naive_interpolate(one, RatParams{1, 1, 1, 1, 0, 0}, *f);
  ASSERT_TRUE(sol);
}

TEST(Naive, SolutionsDivisibleAndInSpan) {
  std::mt19937 rng(67);
  for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
    for (int it = 0; it < 30; ++it) {
      const int n = 2 + static_cast<int>(rng() % 8);
      const int ell = 1 + static_cast<int>(rng() % 5);
      const int s = 1 + static_cast<int>(rng() % std::min(ell, 3));
      RatParams p{n, 0, s, ell, HalfInt(1), HalfInt(1)};
      while (!feasible(p)) ++p.tau;
      auto pts = random_points(*f, static_cast<std::size_t>(n), rng);
      auto sol = naive_interpolate(pts, p, *f);
      ASSERT_TRUE(sol);
      auto norm = normalize_points(pts, *f);
      auto [ctx, basis] = build_basis(norm, s, ell, *f);
      for (int j = ell - s + 1; j <= ell; ++j) {
        Poly gz = Poly::constant(*f, 1);
        for (int k = 0; k < j - (ell - s); ++k) gz *= ctx.g_z;
        ASSERT_TRUE(((*sol)[j] % gz).is_zero());
      }
      auto coef = express_in_basis(*sol, basis);
      ASSERT_TRUE(coef);
      HomogPoly back(*f, ell);
      for (int j = 0; j <= ell; ++j)
        back += (*coef)[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)];
      ASSERT_EQ(back, *sol);
    }
  }
}

TEST(Factors, PlantAndRecover) {
  std::mt19937 rng(71);
  for (auto f : {Field::make(5, 1), Field::make(13, 1)}) {
    for (int it = 0; it < 60; ++it) {
      const int w1 = static_cast<int>(rng() % 4), w2 = static_cast<int>(rng() % 4);
      Poly f1 = random_poly(*f, w1, rng), f2 = random_poly(*f, w2, rng);
      if (f1.is_zero() && f2.is_zero()) continue;
      if (!gcd(f1, f2).is_one()) continue;
      const int ell = 1 + static_cast<int>(rng() % 3);
      HomogPoly cof(*f, ell - 1);
      for (int i = 0; i < ell; ++i) cof[i] = random_poly(*f, 3, rng);
      if (cof.is_zero()) continue;
      HomogPoly Q = HomogPoly(1, {f2, f1}) * cof;
      auto facs = find_linear_factors(Q, HalfInt(w1), HalfInt(w2));
      const Elem k = f->inv(f1.is_zero() ? f2.lead() : f1.lead());
      LinearFactor want{f1.scaled(k), f2.scaled(k)};
      ASSERT_NE(std::find(facs.begin(), facs.end(), want), facs.end());
      for (const auto& fac : facs) ASSERT_TRUE(divides(fac, Q));
    }
  }
}

TEST(Factors, PureZPower) {
  auto f = Field::make(5, 1);
  HomogPoly zl = HomogPoly::monomial(Poly::constant(*f, 1), 0, 3);
  auto facs = find_linear_factors(zl, HalfInt(2), HalfInt(2));
  ASSERT_EQ(facs.size(), 1u);
  EXPECT_TRUE(facs[0].f1.is_zero());
  EXPECT_TRUE(facs[0].f2.is_one());
}

TEST(Factors, NoFactorOverField) {
  // y^2 - 2 z^2 over GF(5): 2 is not a square.
  auto f = Field::make(5, 1);
  HomogPoly Q(2, {Poly::constant(*f, 3), Poly(*f), Poly::constant(*f, 1)});
  EXPECT_TRUE(find_linear_factors(Q, HalfInt(1), HalfInt(1)).empty());
}

TEST(Pade, Reconstructs) {
  auto f = Field::make(13, 1);
  Poly num(*f, {3, 1}), den(*f, {1, 4, 2});
  // series = num / den mod x^6
  Poly s = num;
  for (int i = 0; i < 6; ++i) s = (s + (num - den * s).truncated(6)).truncated(6);
  auto r = pade(s, 6, 1, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first * den, r->second * num);
}
