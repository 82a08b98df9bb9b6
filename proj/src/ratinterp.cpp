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

#include "wulist/ratinterp.hpp"

#include <algorithm>
#include <set>

#include "wulist/errors.hpp"
#include "wulist/polyring.hpp"
#include "ratinterp_detail.hpp"

namespace wulist {

InterpPoint InterpPoint::normalized(const Field& f) const {
  f.check(x);
  f.check(y);
  f.check(z);
  if (z != 0) return {x, f.div(y, z), 1};
  if (y == 0) throw UsageError("interpolation point with y = z = 0");
  return {x, 1, 0};
}

std::vector<InterpPoint> normalize_points(std::span<const InterpPoint> pts,
                                          const Field& f) {
  std::vector<InterpPoint> out;
  out.reserve(pts.size());
  std::set<Elem> xs;
  for (const InterpPoint& p : pts) {
    out.push_back(p.normalized(f));
    if (!xs.insert(p.x).second)
      throw UsageError("interpolation points must have distinct x");
  }
  return out;
}

void RatParams::validate() const {
  if (s < 1) throw UsageError("multiplicity s must be at least 1");
  if (ell < s) throw UsageError("list size ell must be at least s");
  if (n < 0 || tau < 0) throw UsageError("n and tau must be non-negative");
}

bool feasible(int n, int tau, int s, int ell, HalfInt w_total) {
  // Everything times 4 so the half-integers disappear.
  const std::int64_t S = s, L = ell;
  const std::int64_t lhs = 2 * std::int64_t{n} * S * (S + 1);
  const std::int64_t rhs =
      4 * S * tau * (L + 1) - L * (L + 1) * w_total.twice();
  return lhs < rhs;
}

bool feasible(const RatParams& params) {
  params.validate();
  return feasible(params.n, params.tau, params.s, params.ell,
                  params.w1 + params.w2);
}

std::optional<Multiplicities> choose_params(int n, int tau, HalfInt w_total,
                                            int ell_max,
                                            ListConstraint constraint) {
  for (int ell = 1; ell <= ell_max; ++ell) {
    const int s_max = constraint == ListConstraint::ell_ge_s ? ell : (ell - 1) / 2;
    for (int s = 1; s <= s_max; ++s)
      if (feasible(n, tau, s, ell, w_total)) return Multiplicities{s, ell};
  }
  return std::nullopt;
}

BasisContext make_basis_context(std::span<const InterpPoint> pts,
                                const Field& f) {
  std::vector<Elem> xs, ys, zs;
  for (const InterpPoint& p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
    zs.push_back(p.z);
  }
  BasisContext c;
  c.G = Poly::from_roots(f, xs);
  c.R_y = lagrange(xs, ys, f);
  c.R_z = lagrange(xs, zs, f);
  if (c.R_z.is_zero()) {
    // Every point is at infinity: g_z = G, lambda = (1, 0).
    c.g_z = c.G;
    c.lambda1 = Poly::constant(f, 1);
    c.lambda2 = Poly(f);
  } else {
    const EATrace t = ea_full(c.G, c.R_z);
    const EARow& row = t.rows[t.gcd_index()];
    const Elem k = f.inv(row.s.lead());
    c.g_z = row.s.scaled(k);
    c.lambda1 = row.u.scaled(k);
    c.lambda2 = row.v.scaled(k);
  }
  c.upsilon = (c.lambda2 * c.R_y) % c.G;
  return c;
}

BasisExponents basis_exponents(int j, int s, int ell) {
  auto pos = [](int v) { return std::max(v, 0); };
  return {pos(s - j), j - pos(j - (ell - s)) - pos(j - s), pos(j - (ell - s)),
          pos(ell - s - j), pos(j - s)};
}

std::pair<BasisContext, std::vector<HomogPoly>> build_basis(
    std::span<const InterpPoint> pts, int s, int ell, const Field& f) {
  RatParams{static_cast<int>(pts.size()), 0, s, ell, 0, 0}.validate();
  for (const InterpPoint& p : pts)
    if (!p.is_normalized()) throw UsageError("points must be normalised");
  BasisContext ctx = make_basis_context(pts, f);
  const Poly one = Poly::constant(f, 1);
  const HomogPoly F1(1, {-ctx.upsilon, ctx.g_z});
  const HomogPoly F2(2, {-ctx.R_y, one, Poly(f)});
  const HomogPoly F3(1, {ctx.G / ctx.g_z, Poly(f)});
  const HomogPoly Y = HomogPoly::monomial(one, 1, 0);
  const HomogPoly Z = HomogPoly::monomial(one, 0, 1);
  std::vector<HomogPoly> basis;
  basis.reserve(static_cast<std::size_t>(ell + 1));
  for (int j = 0; j <= ell; ++j) {
    const BasisExponents e = basis_exponents(j, s, ell);
    basis.push_back(F1.pow(e.a) * F2.pow(e.b) * F3.pow(e.c) * Y.pow(e.d) *
                    Z.pow(e.e));
  }
  return {std::move(ctx), std::move(basis)};
}

namespace detail {

std::vector<std::vector<Elem>> binomials(int n, const Field& f) {
  std::vector<std::vector<Elem>> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    auto& row = c[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i + 1), 1);
    for (int k = 1; k < i; ++k)
      row[static_cast<std::size_t>(k)] =
          f.add(c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)],
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]);
  }
  return c;
}

std::vector<Poly> shift_variable(const std::vector<Poly>& coeffs, Elem c,
                                 const Field& f) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<Poly> out(coeffs.size(), Poly(f));
  if (d < 0) return out;
  const auto binom = binomials(d, f);
  for (int i = 0; i <= d; ++i) {
    const Poly& ci = coeffs[static_cast<std::size_t>(i)];
    if (ci.is_zero()) continue;
    Elem cpow = 1;  // c^(i-b), walking b downward
    for (int b = i; b >= 0; --b) {
      const Elem k = f.mul(binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)], cpow);
      if (k != 0) out[static_cast<std::size_t>(b)] += ci.scaled(k);
      cpow = f.mul(cpow, c);
    }
  }
  return out;
}

}  // namespace detail

bool check_multiplicity(const HomogPoly& Q, const InterpPoint& pt, int s) {
  const Field& f = Q.field();
  if (!pt.is_normalized()) throw UsageError("point must be normalised");
  if (s <= 0) return true;
  const int ell = Q.ell();
  // Dehomogenise into a polynomial in one variable W over F[x].
  std::vector<Poly> w(static_cast<std::size_t>(ell + 1), Poly(f));
  if (pt.z == 1) {
    for (int i = 0; i <= ell; ++i) w[static_cast<std::size_t>(i)] = Q[i];
    w = detail::shift_variable(w, pt.y, f);
  } else {
    for (int i = 0; i <= ell; ++i) w[static_cast<std::size_t>(ell - i)] = Q[i];
  }
  for (int b = 0; b < s && b <= ell; ++b) {
    const Poly shifted = w[static_cast<std::size_t>(b)].compose_shift(pt.x);
    for (int a = 0; a + b < s; ++a)
      if (shifted[static_cast<std::size_t>(a)] != 0) return false;
  }
  return true;
}

PolyMatrix basis_matrix(const std::vector<HomogPoly>& basis) {
  PolyMatrix m;
  m.reserve(basis.size());
  for (const HomogPoly& b : basis) m.push_back(b.coeffs());
  return m;
}

std::vector<std::int64_t> column_shifts_twice(int ell, HalfInt w1, HalfInt w2) {
  std::vector<std::int64_t> sh(static_cast<std::size_t>(ell + 1));
  for (int i = 0; i <= ell; ++i)
    sh[static_cast<std::size_t>(i)] = i * w2.twice() + (ell - i) * w1.twice();
  return sh;
}

HomogPoly interpolate(std::span<const InterpPoint> pts_in,
                      const RatParams& params, const Field& f) {
  if (!feasible(params))
    throw ParameterError("interpolation parameters are not feasible");
  if (static_cast<int>(pts_in.size()) != params.n)
    throw UsageError("point count does not match n");
  const std::vector<InterpPoint> pts = normalize_points(pts_in, f);
  auto [ctx, basis] = build_basis(pts, params.s, params.ell, f);
  const auto shifts = column_shifts_twice(params.ell, params.w1, params.w2);
  RowReduction red = row_reduce(basis_matrix(basis), shifts);
  HomogPoly Q(params.ell, std::move(red.reduced[red.shortest_row]));
  if (Q.is_zero()) throw InternalError("interpolation returned zero");
  if (Q.wdeg_twice(params.w1, params.w2) >= 2 * std::int64_t{params.s} * params.tau)
    throw InternalError("interpolation polynomial exceeds the degree bound");
  for (const InterpPoint& p : pts)
    if (!check_multiplicity(Q, p, params.s))
      throw InternalError("interpolation polynomial misses a multiplicity");
  return Q;
}

std::optional<std::vector<Poly>> express_in_basis(
    const HomogPoly& P, const std::vector<HomogPoly>& basis) {
  const Field& f = P.field();
  const int ell = P.ell();
  if (static_cast<int>(basis.size()) != ell + 1)
    throw UsageError("basis size does not match the form degree");
  std::vector<Poly> coef(basis.size(), Poly(f));
  HomogPoly rest = P;
  while (!rest.is_zero()) {
    const int k = rest.ydegree();
    const HomogPoly& b = basis[static_cast<std::size_t>(ell - k)];
    if (b.ydegree() != k) throw UsageError("basis element has wrong y-degree");
    auto [quo, rem] = divmod(rest[k], b[k]);
    if (!rem.is_zero()) return std::nullopt;
    rest -= quo * b;
    coef[static_cast<std::size_t>(ell - k)] += quo;
  }
  return coef;
}

}  // namespace wulist
