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

#include <algorithm>

#include "ratinterp_detail.hpp"
#include "wulist/errors.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {
namespace {

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::vector<int> degree_caps(const RatParams& p, std::int64_t budget_twice) {
  const auto shifts = column_shifts_twice(p.ell, p.w1, p.w2);
  std::vector<int> caps(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i)
    caps[i] = static_cast<int>(std::max<std::int64_t>(-1, floor_div2(budget_twice - shifts[i])));
  return caps;
}

HomogPoly assemble(const std::vector<Elem>& sol, const std::vector<int>& caps,
                   int ell, const Field& f) {
  HomogPoly Q(f, ell);
  std::size_t at = 0;
  for (int i = 0; i <= ell; ++i) {
    const int d = caps[static_cast<std::size_t>(i)];
    std::vector<Elem> c(sol.begin() + static_cast<std::ptrdiff_t>(at),
                        sol.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(d + 1)));
    at += static_cast<std::size_t>(d + 1);
    Q[i] = Poly(f, std::move(c));
  }
  return Q;
}

}  // namespace

NaiveSystem naive_system(std::span<const InterpPoint> pts, int s, int ell,
                         const std::vector<int>& max_degs, const Field& f) {
  if (static_cast<int>(max_degs.size()) != ell + 1)
    throw UsageError("naive_system needs ell+1 degree caps");
  NaiveSystem sys;
  sys.max_degs = max_degs;
  std::vector<std::size_t> offset;
  int top = std::max(ell, 0);
  for (int d : max_degs) {
    offset.push_back(sys.unknowns);
    sys.unknowns += static_cast<std::size_t>(d + 1);
    top = std::max(top, d);
  }
  const auto binom = detail::binomials(top, f);
  auto C = [&](int n, int k) -> Elem {
    return k > n ? 0 : binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (const InterpPoint& p0 : pts) {
    const InterpPoint p = p0.normalized(f);
    std::vector<Elem> xpow(static_cast<std::size_t>(top + 1), 1), ypow = xpow;
    for (int k = 1; k <= top; ++k) {
      xpow[static_cast<std::size_t>(k)] = f.mul(xpow[static_cast<std::size_t>(k - 1)], p.x);
      ypow[static_cast<std::size_t>(k)] = f.mul(ypow[static_cast<std::size_t>(k - 1)], p.y);
    }
    // Coefficient of x^a W^b in the shifted dehomogenisation, a + b < s.
    for (int b = 0; b < s; ++b) {
      for (int a = 0; a + b < s; ++a) {
        std::vector<Elem> row(sys.unknowns, 0);
        for (int i = 0; i <= ell; ++i) {
          Elem yfac;
          if (p.z == 1) {
            yfac = i >= b ? f.mul(C(i, b), ypow[static_cast<std::size_t>(i - b)]) : 0;
          } else {
            yfac = (ell - i == b) ? 1 : 0;
          }
          if (yfac == 0) continue;
          for (int k = a; k <= max_degs[static_cast<std::size_t>(i)]; ++k)
            row[offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(k)] =
                f.mul(yfac, f.mul(C(k, a), xpow[static_cast<std::size_t>(k - a)]));
        }
        sys.rows.push_back(std::move(row));
      }
    }
  }
  return sys;
}

std::vector<std::vector<Elem>> nullspace(std::vector<std::vector<Elem>> rows,
                                         std::size_t cols, const Field& f) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Elem inv = f.inv(rows[r][c]);
    for (Elem& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem k = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<HomogPoly> naive_interpolate(std::span<const InterpPoint> pts,
                                           const RatParams& params,
                                           const Field& f) {
  params.validate();
  const auto caps = degree_caps(params, 2 * std::int64_t{params.s} * params.tau - 1);
  const NaiveSystem sys = naive_system(pts, params.s, params.ell, caps, f);
  if (sys.unknowns == 0) return std::nullopt;
  const auto ns = nullspace(sys.rows, sys.unknowns, f);
  if (ns.empty()) return std::nullopt;
  return assemble(ns.front(), caps, params.ell, f);
}

std::pair<std::int64_t, HomogPoly> naive_min_interpolant(
    std::span<const InterpPoint> pts, const RatParams& params, const Field& f) {
  params.validate();
  const auto shifts = column_shifts_twice(params.ell, params.w1, params.w2);
  std::int64_t budget = *std::min_element(shifts.begin(), shifts.end());
  // G^s z^ell always qualifies, so the search terminates below this.
  const std::int64_t ceiling =
      2 * std::int64_t{params.s} * static_cast<std::int64_t>(pts.size()) +
      *std::max_element(shifts.begin(), shifts.end());
  for (; budget <= ceiling; ++budget) {
    const auto caps = degree_caps(params, budget);
    const NaiveSystem sys = naive_system(pts, params.s, params.ell, caps, f);
    if (sys.unknowns == 0) continue;
    const auto ns = nullspace(sys.rows, sys.unknowns, f);
    if (!ns.empty()) return {budget, assemble(ns.front(), caps, params.ell, f)};
  }
  throw InternalError("naive interpolation found no solution below G^s z^ell");
}

}  // namespace wulist
