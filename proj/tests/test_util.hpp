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

#ifndef WULIST_TESTS_TEST_UTIL_HPP
#define WULIST_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "wulist/polyring.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist::testing {

/// Random polynomial of degree <= deg (exactly deg when `exact`).
inline Poly random_poly(const Field& f, int deg, std::mt19937& rng,
                        bool exact = false) {
  if (deg < 0) return Poly(f);
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = static_cast<Elem>(rng() % f.order());
  if (exact && c.back() == 0) c.back() = 1 + static_cast<Elem>(rng() % (f.order() - 1));
  return Poly(f, std::move(c));
}

inline Poly random_irreducible(const Field& f, int deg, std::mt19937& rng) {
  for (;;) {
    Poly g = random_poly(f, deg, rng, true).monic();
    if (is_irreducible(g)) return g;
  }
}

/// n distinct random elements.
inline std::vector<Elem> distinct_elements(const Field& f, std::size_t n,
                                           std::mt19937& rng) {
  auto e = f.elements();
  std::shuffle(e.begin(), e.end(), rng);
  e.resize(n);
  return e;
}

/// Strictly decreasing remainder degrees, the determinant identity, the
/// Bezout relation and the degree identity, at every row.
inline bool ea_invariants_hold(const EATrace& t) {
  const Field& f = t.p.field();
  const int dp = t.p.degree().value();
  if (t.rows.size() < 2 || !t.rows.back().s.is_zero()) return false;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const EARow& r = t.rows[i];
    const EARow& q = t.rows[i - 1];
    if (i >= 2 && !(r.s.degree() < q.s.degree())) return false;
    const Poly det = r.u * q.v - q.u * r.v;
    const Elem sign = (i % 2 == 0) ? 1 : f.neg(1);
    if (det != Poly::constant(f, sign)) return false;
    if (r.s != r.u * t.p + r.v * t.q) return false;
    if (!(r.v.degree() + q.s.degree() == dp)) return false;
  }
  return true;
}

/// Random points with distinct x; roughly a quarter at infinity.
inline std::vector<InterpPoint> random_points(const Field& f, std::size_t n,
                                              std::mt19937& rng) {
  std::vector<InterpPoint> pts;
  for (Elem x : distinct_elements(f, n, rng)) {
    if (rng() % 4 == 0)
      pts.push_back({x, 1, 0});
    else
      pts.push_back({x, static_cast<Elem>(rng() % f.order()), 1});
  }
  return pts;
}

}  // namespace wulist::testing

#endif  // WULIST_TESTS_TEST_UTIL_HPP
